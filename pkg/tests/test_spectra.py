import json
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from _strategies import polys
from coxeterpoly.chebyshev import u
from coxeterpoly.coxeter import extended_canonical_coxeter, q_poly, star_coxeter
from coxeterpoly.cyclotomic import v
from coxeterpoly.polyring import IntPoly, poly, squarefree_decomposition, squarefree_part
from coxeterpoly.spectra import (
    aberth_roots,
    circle_census,
    classify_self_reciprocal,
    count_real_roots,
    interlacing_check,
    isolate_real_roots,
    monotonicity_check,
    off_circle_bound_check,
    sign_alternation_check,
    sturm_chain,
)
from coxeterpoly.symmetry import symmetrize

T = IntPoly.T()


def numeric_real_roots(p: IntPoly) -> np.ndarray:
    r = np.roots(np.array(p.coeffs[::-1], dtype=float))
    return np.sort(r[np.abs(r.imag) <= 1e-9].real)


def test_sturm_examples():
    chain = sturm_chain(poly(-2, 0, 1))
    assert chain.head == poly(-2, 0, 1)
    assert chain.count_closed(-2, 2) == 2
    assert sturm_chain(poly(1, 0, 1)).count_all() == 0
    c = sturm_chain(poly(0, -5, 0, 1))
    assert c.count_closed(-2, 2) == 1 and c.count_all() == 3
    with pytest.raises(ValueError):
        sturm_chain(poly(3))


def test_count_examples():
    assert count_real_roots(poly(0, -5, 0, 1), -2, 2) == 1
    assert count_real_roots(u(4), -2, 2) == 4
    assert count_real_roots(poly(-1, 1) ** 2 * poly(3, 1), -2, 2, with_multiplicity=True) == 2
    # closed interval: roots on the endpoints count
    assert count_real_roots(poly(-4, 0, 1), -2, 2) == 2
    assert count_real_roots(poly(-4, 0, 1), -2, -2) == 1
    with pytest.raises(ValueError):
        count_real_roots(T, 1, 0)


def test_isolate_examples():
    ivs = isolate_real_roots(poly(-2, 0, 1))
    assert len(ivs) == 2
    assert ivs[0][0] < -Fraction(14142, 10000) and ivs[1][1] > Fraction(14142, 10000)
    assert all(hi - lo <= Fraction(1, 2**20) for lo, hi in ivs)
    assert isolate_real_roots(poly(1, 0, 1)) == []
    assert len(isolate_real_roots(poly(0, -5, 0, 1))) == 3
    with pytest.raises(ValueError):
        isolate_real_roots(poly(1, -2, 1))


def test_isolate_subrange_excludes_endpoints():
    p = poly(-4, 0, 1) * poly(-5, 0, 1)  # roots +-2, +-sqrt5
    assert len(isolate_real_roots(p, lo=2, hi=3)) == 1
    assert len(isolate_real_roots(p, lo=-3, hi=2)) == 2
    assert isolate_real_roots(p, lo=-2, hi=2) == []


@given(polys(9, nonzero=True))
def test_isolation_against_numpy(p):
    assume(p.degree >= 1)
    sq = squarefree_part(p)
    ivs = isolate_real_roots(sq, width=Fraction(1, 2**40))
    for lo, hi in ivs:
        assert sq.sign_at(lo) * sq.sign_at(hi) < 0
    assert count_real_roots(p) == len(ivs)
    num = numeric_real_roots(sq)
    if len(num) == len(ivs):
        mids = np.array([float((lo + hi) / 2) for lo, hi in ivs])
        assert np.allclose(mids, num, atol=1e-6)


def test_interlacing_examples():
    assert interlacing_check(u(3), u(4))
    assert interlacing_check(T, poly(-1, 0, 1))
    assert not interlacing_check(poly(-5, 1), poly(-1, 0, 1))
    for n in range(2, 30):
        assert interlacing_check(u(n), u(n + 1))
        assert sign_alternation_check(u(n - 1), u(n), u(n + 1))


def test_interlacing_fails_on_the_q_ladder():
    # q_(1,1,3) has roots 0, +-1.126, +-2.175; q_(1,1,2) has +-0.456, +-2.190,
    # so (-2.175, -1.126) holds no root of q_(1,1,2)
    lower, upper = q_poly((1, 1, 2)), q_poly((1, 1, 3))
    assert lower == poly(1, 0, -5, 0, 1)
    assert upper == poly(0, 6, 0, -6, 0, 1)
    assert not interlacing_check(lower, upper)
    roots_up, roots_low = numeric_real_roots(upper), numeric_real_roots(lower)
    gap = (roots_up[0], roots_up[1])
    assert not any(gap[0] <= x <= gap[1] for x in roots_low)
    # the reverse containment does hold here
    assert interlacing_check(upper, lower)


def test_sign_alternation_fails_at_shared_root():
    assert not sign_alternation_check(q_poly((1, 2, 2)), q_poly((2, 2, 2)), q_poly((2, 2, 3)))


def test_classify_examples():
    r = classify_self_reciprocal(extended_canonical_coxeter((1, 1, 1)))
    assert (r.on_unit_circle, r.off_unit_circle, r.is_rho_one) == (1, 2, False)
    r = classify_self_reciprocal(v(4))
    assert r.all_on_circle and r.is_rho_one and r.spectral_radius_bracket == (1, 1)
    r = classify_self_reciprocal(extended_canonical_coxeter((3, 3, 3, 3)))
    assert r.is_rho_one and list(r.cyclotomic_indices) == [2, 3, 3, 3, 6, 6]
    r = classify_self_reciprocal(extended_canonical_coxeter((2, 2, 2, 2, 4)))
    assert r.is_rho_one and list(r.cyclotomic_indices) == [2, 2, 2, 2, 3, 6, 6]
    with pytest.raises(ValueError):
        classify_self_reciprocal(poly(1, 2))


def test_lehmer_bracket():
    r = classify_self_reciprocal(star_coxeter((2, 3, 7)), Fraction(1, 2**40))
    lo, hi = r.spectral_radius_bracket
    assert r.bracket_is_exact
    assert Fraction(11762808182, 10**10) <= lo and hi <= Fraction(11762808183, 10**10)
    assert hi - lo <= Fraction(1, 2**40)


def test_report_json():
    d = json.loads(classify_self_reciprocal(v(4)).to_json())
    assert set(d) == {"degree", "on_circle", "off_circle", "rho_is_one", "rho_bracket", "cyclotomic_indices"}
    assert d["rho_bracket"] == [1, 1, 1, 1]


def test_off_circle_bound_examples():
    assert off_circle_bound_check((1, 1, 1)) == 2
    assert off_circle_bound_check((3, 3, 3, 3)) == 0


def test_monotonicity_examples():
    # vacuous: (2,3,8) has rho > 1
    assert monotonicity_check((2, 3, 7))
    # (2,3,6) has rho = 1 while (2,3,5) does not
    assert off_circle_bound_check((2, 3, 6)) == 0
    assert off_circle_bound_check((2, 3, 5)) == 2
    assert not monotonicity_check((2, 3, 5))
    # (2,2,2,2) has rho = 1; (2,2,2,1) gives the same f^ as (2,2,2), rho > 1
    assert not monotonicity_check((2, 2, 2, 1))


def _sr_from(q: IntPoly, eps: int) -> IntPoly:
    return poly(1, 1) ** eps * symmetrize(q)


@given(polys(6, nonzero=True), st.integers(0, 1))
def test_census_against_numpy(q, eps):
    p = _sr_from(q, eps)
    on, off = circle_census(p)
    assert on + off == p.degree and off % 2 == 0
    # numeric oracle on each squarefree factor, where roots are simple
    expected_on = 0
    for f, k in squarefree_decomposition(p):
        if f.degree < 1:
            continue
        r = np.roots(np.array(f.coeffs[::-1], dtype=float))
        dist = np.abs(np.abs(r) - 1)
        assume(np.all((dist < 1e-7) | (dist > 1e-4)))
        expected_on += k * int(np.sum(dist < 1e-7))
    assert on == expected_on


@given(polys(6, nonzero=True), st.integers(0, 1))
def test_classify_bracket_contains_numeric_radius(q, eps):
    assume(q.lc != 0)
    p = _sr_from(q, eps)
    r = classify_self_reciprocal(p, Fraction(1, 2**30), with_cyclotomic=False)
    rho = np.max(np.abs(np.roots(np.array(p.coeffs[::-1], dtype=float)))) if p.degree else 1.0
    lo, hi = r.spectral_radius_bracket
    if r.is_rho_one:
        assert (lo, hi) == (1, 1)
    else:
        assert float(lo) - 1e-6 <= rho <= float(hi) + 1e-6
    assert classify_self_reciprocal(p.reversed()) == classify_self_reciprocal(p)


def test_aberth_matches_numpy():
    z, ok = aberth_roots(star_coxeter((2, 3, 7)))
    assert ok
    expected = np.roots(LEHMER_DESC)
    assert np.allclose(np.sort_complex(z), np.sort_complex(expected), atol=1e-9)


LEHMER_DESC = [1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1]
