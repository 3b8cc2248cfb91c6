import pytest
from hypothesis import given

from _strategies import weight_tuples
from coxeterpoly.chebyshev import u
from coxeterpoly.coxeter import (
    CoxeterBundle,
    WeightType,
    canonical_coxeter,
    extended_canonical_coxeter,
    one_point_reduction,
    q_poly,
    star_coxeter,
    tree_coxeter,
    verify_f_recursion,
    verify_q_recursion,
    verify_recursion,
    verify_representation,
    weight_types,
)
from coxeterpoly.cyclotomic import v
from coxeterpoly.graphs import Multigraph, kronecker_graph, path, star
from coxeterpoly.polyring import ONE, ZERO, IntPoly, compose_T2, gcd, poly
from coxeterpoly.symmetry import is_self_reciprocal, symmetrize

T = IntPoly.T()
LEHMER = poly(1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1)


def test_weight_type():
    w = WeightType.of(7, 2, 3)
    assert w.weights == (2, 3, 7)
    assert w.canonical_vertices == 11 and w.extended_vertices == 12
    assert str(w) == "(2,3,7)"
    with pytest.raises(ValueError):
        WeightType.of(3)
    with pytest.raises(ValueError):
        WeightType.of(0, 2)


def test_weight_types_enumeration():
    ws = weight_types(6)
    keys = [(w.total, w.weights) for w in ws]
    assert keys == sorted(keys)
    assert all(w.t >= 2 and w.total <= 6 for w in ws)
    # partitions of 2..6 into at least two parts
    assert len(ws) == 1 + 2 + 4 + 6 + 10
    assert all(w.t <= 3 and max(w.weights) <= 4 for w in weight_types(12, 3, 4))


def test_one_point_reduction_examples():
    assert one_point_reduction(v(2), ONE) == v(3)
    assert one_point_reduction(ONE, ZERO) == v(2)
    f_b, f_c = ONE, ZERO
    for n in range(1, 12):
        f_b, f_c = one_point_reduction(f_b, f_c), f_b
        assert f_b == v(n + 1)


def test_star_examples():
    assert star_coxeter((2, 2)) == v(4)
    assert star_coxeter((2, 3, 7)) == LEHMER
    for t in range(2, 6):
        assert star_coxeter((1,) * t) == poly(1, 1)


def test_canonical_examples():
    assert canonical_coxeter((2, 2)) == poly(-1, 0, 1) ** 2
    assert canonical_coxeter((1, 1)) == poly(1, -2, 1)
    p = canonical_coxeter((2, 3, 6))
    assert p.degree == 10 and p == poly(1, -2, 1) * v(2) * v(3) * v(6)


def test_extended_examples():
    assert extended_canonical_coxeter((2, 2)) == poly(1, 1) * poly(1, -1, -2, -1, 1)
    assert extended_canonical_coxeter((2, 3, 6)) == canonical_coxeter((2, 3, 7))
    for w in weight_types(14):
        assert extended_canonical_coxeter(w).degree == w.extended_vertices


def test_tubular_identities():
    assert extended_canonical_coxeter((2, 2, 2, 2)) == canonical_coxeter((2, 2, 2, 3))
    assert extended_canonical_coxeter((3, 3, 3)) == canonical_coxeter((3, 3, 4))
    assert extended_canonical_coxeter((2, 4, 4)) == canonical_coxeter((2, 4, 5))
    assert extended_canonical_coxeter((2, 3, 6)) == canonical_coxeter((2, 3, 7))


def test_q_examples():
    assert q_poly((1, 1, 1)) == poly(0, -5, 0, 1)
    for t in range(2, 7):
        assert q_poly((1,) * t) == poly(0, -5, 0, 1)
    # T (T^2 - 4) - chi_[2,2] with chi_[2,2] = u_3; the empty path is 1, not T
    q = q_poly((2, 2))
    assert q == T * poly(-4, 0, 1) * u(1) * u(1) - u(3)
    assert q == poly(0, 2, 0, -5, 0, 1)
    assert symmetrize(q) == compose_T2(extended_canonical_coxeter((2, 2)))


def test_representation_examples():
    assert verify_representation((2, 2))
    assert verify_representation((2, 3, 7))


@given(weight_tuples())
def test_representation_property(ws):
    assert verify_representation(ws)


def test_recursion_one_point_form():
    assert verify_recursion((2, 2))
    assert verify_recursion((1, 1, 2))
    assert verify_f_recursion((2, 3, 5))
    assert verify_q_recursion((3, 3, 4))
    with pytest.raises(ValueError, match="p_t >= 2"):
        verify_recursion((2, 1))
    with pytest.raises(ValueError):
        verify_f_recursion((2, 2), form="other")


def test_three_term_f_recursion_is_false():
    # f^_(2,3) vs T f^_(2,2) - f^_(2,1): constant terms +1 and -1
    lhs = extended_canonical_coxeter((2, 3))
    rhs = T * extended_canonical_coxeter((2, 2)) - extended_canonical_coxeter((2, 1))
    assert lhs.coeffs[0] == 1 and rhs.coeffs[0] == -1
    assert not verify_f_recursion((2, 2), form="three-term")
    assert not verify_recursion((2, 2), form="three-term")


@given(weight_tuples(max_t=4, max_weight=6))
def test_recursion_on_any_arm(ws):
    if ws[-1] >= 2:
        assert verify_recursion(ws)


def test_tree_coxeter_examples():
    for n in range(1, 15):
        assert tree_coxeter(path(n)) == v(n + 1)
    assert tree_coxeter(star((2, 3, 7))) == star_coxeter((2, 3, 7))
    assert tree_coxeter(Multigraph(1, ((0,),))) == poly(1, 1)
    with pytest.raises(ValueError):
        tree_coxeter(kronecker_graph(2))


def test_star_formula_matches_tree_recursion():
    for w in weight_types(16, 5):
        assert star_coxeter(w) == tree_coxeter(star(w.weights))


@given(weight_tuples())
def test_bundle_self_reciprocal_and_degrees(ws):
    b = CoxeterBundle.of(ws)
    for p in (b.star_poly, b.canonical_poly, b.extended_poly):
        assert is_self_reciprocal(p)
    assert b.extended_poly.degree == 1 + b.canonical_poly.degree == b.q_poly.degree
    assert b.extended_poly == one_point_reduction(b.canonical_poly, b.star_poly)


@given(weight_tuples())
def test_order_invariance(ws):
    rev = tuple(reversed(ws))
    assert CoxeterBundle.of(ws) == CoxeterBundle.of(rev)


def test_q_parity():
    for w in weight_types(18, 6):
        q = q_poly(w)
        assert all(c == 0 for i, c in enumerate(q.coeffs) if (i - q.degree) % 2)


def test_ladder_neighbours_can_share_a_root():
    # q_(2,2,2) = T^2 (T^4 - 5T^2 + 3) shares the root 0 with both neighbours
    assert q_poly((2, 2, 2)) == poly(0, 0, 3, 0, -5, 0, 1)
    assert gcd(q_poly((1, 2, 2)), q_poly((2, 2, 2))) == T
    assert gcd(q_poly((2, 2, 2)), q_poly((2, 2, 3))) == T
    # the same never happens on the first rungs of (2, p)
    for p in range(2, 12):
        assert gcd(q_poly((2, p)), q_poly((2, p + 1))).degree == 0
