"""Exact real-root counting and unit-circle classification.

All decisions (root counts, interlacing, on/off circle census) are made with
Sturm chains over the integers and rational sign evaluations.  Floating
point appears only in :func:`aberth_roots`, which narrows reported spectral
radius brackets when the largest root is not real and never feeds a
boolean.

Circle census.  Write a self-reciprocal p as (T + 1)^e q*(T).  A root t of
q* satisfies t + 1/t = x for a root x of q.  For real x in [-2, 2] the pair
t, 1/t lies on the unit circle; otherwise (x real outside, or x non-real)
|t| != 1.  Hence on_circle(p) = e + 2 * #{roots of q in [-2, 2]}, counted
with multiplicity.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from .cyclotomic import extract_cyclotomic_part
from .polyring import (
    IntPoly,
    derivative,
    gcd,
    pseudo_rem,
    squarefree_decomposition,
    squarefree_part,
)
from .symmetry import is_self_reciprocal, split_parity

Rational = int | Fraction
Interval = tuple[Fraction, Fraction]

ISOLATION_WIDTH = Fraction(1, 2**20)
DEFAULT_TOL = Fraction(1, 2**30)


# Sturm chains ----------------------------------------------------------------


@dataclass(frozen=True)
class SturmChain:
    """Signed remainder sequence of a squarefree polynomial.

    Members are primitive integer polynomials; each is a positive multiple
    of the textbook rational remainder, so sign variations are unchanged.
    """

    chain: tuple[IntPoly, ...]

    @property
    def head(self) -> IntPoly:
        return self.chain[0]

    def variations(self, x: Rational) -> int:
        return _count_variations(p.sign_at(x) for p in self.chain)

    def variations_at_infinity(self, positive: bool) -> int:
        signs = []
        for p in self.chain:
            s = 1 if p.lc > 0 else -1
            if not positive and p.degree % 2:
                s = -s
            signs.append(s)
        return _count_variations(signs)

    def count_open_closed(self, a: Rational, b: Rational) -> int:
        """Distinct roots in (a, b]."""
        return self.variations(a) - self.variations(b)

    def count_closed(self, a: Rational, b: Rational) -> int:
        """Distinct roots in [a, b]."""
        if a > b:
            raise ValueError("empty interval: a > b")
        extra = 1 if self.head.sign_at(a) == 0 else 0
        return self.count_open_closed(a, b) + extra

    def count_all(self) -> int:
        return self.variations_at_infinity(False) - self.variations_at_infinity(True)


def _count_variations(signs) -> int:
    count, last = 0, 0
    for s in signs:
        if s:
            if last and s != last:
                count += 1
            last = s
    return count


def sturm_chain(p: IntPoly) -> SturmChain:
    if p.is_zero() or p.degree < 1:
        raise ValueError("Sturm chain needs a polynomial of degree >= 1")
    p0 = squarefree_part(p)
    chain = [p0]
    if p0.degree >= 1:
        chain.append(derivative(p0).primitive())
    while chain[-1].degree > 0:
        r = pseudo_rem(chain[-2], chain[-1])
        if r.is_zero():
            break
        chain.append(-_positive_primitive(r))
    return SturmChain(tuple(chain))


def _positive_primitive(p: IntPoly) -> IntPoly:
    # divide by the positive content only, keeping the sign
    return p.exact_div_const(p.content())


# counting ------------------------------------------------------------------


def count_real_roots(
    p: IntPoly,
    a: Rational | None = None,
    b: Rational | None = None,
    with_multiplicity: bool = False,
) -> int:
    """Number of real roots of p in the closed interval [a, b].

    ``None`` endpoints mean -inf / +inf.
    """
    if p.is_zero():
        raise ValueError("zero polynomial has infinitely many roots")
    if a is not None and b is not None and a > b:
        raise ValueError("empty interval: a > b")
    if p.degree == 0:
        return 0
    if not with_multiplicity:
        return _count_distinct(sturm_chain(p), a, b)
    return sum(
        k * _count_distinct(sturm_chain(f), a, b) for f, k in squarefree_decomposition(p)
    )


def _count_distinct(chain: SturmChain, a, b) -> int:
    lo_var = chain.variations_at_infinity(False) if a is None else chain.variations(a)
    hi_var = chain.variations_at_infinity(True) if b is None else chain.variations(b)
    extra = 1 if a is not None and chain.head.sign_at(a) == 0 else 0
    return lo_var - hi_var + extra


def root_bound(p: IntPoly) -> Fraction:
    """Cauchy bound: every root satisfies |x| < 1 + max |c_i / c_n|."""
    lc = abs(p.lc)
    return 1 + Fraction(max((abs(c) for c in p.coeffs[:-1]), default=0), lc)


# isolation -----------------------------------------------------------------


def isolate_real_roots(
    p: IntPoly,
    width: Fraction = ISOLATION_WIDTH,
    lo: Rational | None = None,
    hi: Rational | None = None,
) -> list[Interval]:
    """Disjoint open intervals (lo, hi), one per real root, ascending.

    Endpoints are never roots and ``hi - lo <= width``.  With ``lo``/``hi``
    given, only roots in the open interval (lo, hi) are reported.
    """
    if p.is_zero() or p.degree < 1:
        return []
    if squarefree_part(p).degree != p.degree:
        raise ValueError("isolate_real_roots requires a squarefree polynomial")
    chain = sturm_chain(p)
    bound = root_bound(p)
    a = -bound if lo is None else max(Fraction(lo), -bound)
    b = bound if hi is None else min(Fraction(hi), bound)
    if a >= b:
        return []
    # a root sitting exactly on b is counted by (lo, b] and must be removed;
    # intervals touching a root at either end are split further
    a_root = p.sign_at(a) == 0
    b_root = p.sign_at(b) == 0
    stack = [(a, b)]
    out: list[Interval] = []
    while stack:
        lo_, hi_ = stack.pop()
        at_b = b_root and hi_ == b
        n = chain.count_open_closed(lo_, hi_) - (1 if at_b else 0)
        if n == 0:
            continue
        if n == 1 and not at_b and not (a_root and lo_ == a):
            if hi_ - lo_ > width:
                lo_, hi_ = refine_root(p, lo_, hi_, width)
            out.append((lo_, hi_))
            continue
        mid = _split_point(p, lo_, hi_)
        stack.append((lo_, mid))
        stack.append((mid, hi_))
    out.sort()
    return out


def _split_point(p: IntPoly, lo: Fraction, hi: Fraction) -> Fraction:
    mid = (lo + hi) / 2
    k = 3
    while p.sign_at(mid) == 0:
        mid = (lo + hi) / 2 + (hi - lo) / 2**k
        k += 1
    return mid


def refine_root(p: IntPoly, lo: Fraction, hi: Fraction, width: Fraction) -> Interval:
    """Shrink (lo, hi), holding exactly one simple root, by sign bisection."""
    slo = p.sign_at(lo)
    shi = p.sign_at(hi)
    if slo == 0 or shi == 0 or slo == shi:
        raise ValueError("interval endpoints must bracket a simple root with a sign change")
    while hi - lo > width:
        mid = _split_point(p, lo, hi)
        s = p.sign_at(mid)
        if s == slo:
            lo = mid
        else:
            hi = mid
    return lo, hi


def _refine_away_from(p: IntPoly, iv: Interval, others: Sequence[IntPoly]) -> Interval:
    """Shrink an isolating interval of p until no polynomial in ``others`` has
    a root in its closure.  Each of ``others`` must not vanish at p's root."""
    lo, hi = iv
    chains = [sturm_chain(q) for q in others if q.degree >= 1]
    while any(c.count_closed(lo, hi) for c in chains):
        lo, hi = refine_root(p, lo, hi, (hi - lo) / 2)
    return lo, hi


def largest_real_root_bracket(p: IntPoly, tol: Fraction = DEFAULT_TOL) -> Interval:
    roots = isolate_real_roots(squarefree_part(p), width=tol)
    if not roots:
        raise ValueError("polynomial has no real roots")
    return roots[-1]


# interlacing ---------------------------------------------------------------


def interlacing_check(q_lower: IntPoly, q_upper: IntPoly) -> bool:
    """Between any two consecutive real roots of q_upper (closed interval)
    lies a real root of q_lower."""
    upper = squarefree_part(q_upper)
    lower = squarefree_part(q_lower)
    if upper.degree < 2:
        return True
    ivs = isolate_real_roots(upper)
    common = gcd(lower, upper)
    shared = []
    for iv in ivs:
        shared.append(
            common.degree >= 1 and sturm_chain(common).count_closed(*iv) > 0
        )
    refined = [
        iv if sh else _refine_away_from(upper, iv, [lower]) for iv, sh in zip(ivs, shared)
    ]
    if lower.degree < 1:
        return all(shared[i] or shared[i + 1] for i in range(len(ivs) - 1))
    lc = sturm_chain(lower)
    for i in range(len(refined) - 1):
        if shared[i] or shared[i + 1]:
            continue
        if lc.count_closed(refined[i][1], refined[i + 1][0]) == 0:
            return False
    return True


def sign_alternation_check(q_down: IntPoly, q_mid: IntPoly, q_up: IntPoly) -> bool:
    """At every real root of q_mid, q_up and q_down are nonzero with
    opposite signs."""
    mid = squarefree_part(q_mid)
    if mid.degree < 1:
        return True
    for iv in isolate_real_roots(mid):
        for q in (q_up, q_down):
            g = gcd(q, mid)
            if g.degree >= 1 and sturm_chain(g).count_closed(*iv) > 0:
                return False
        lo, hi = _refine_away_from(mid, iv, [q_up, q_down])
        x = (lo + hi) / 2
        if q_up.sign_at(x) * q_down.sign_at(x) >= 0:
            return False
    return True


# numeric refinement -----------------------------------------------------------


def aberth_roots(p: IntPoly, tol: float = 1e-12, max_iter: int = 200) -> tuple[np.ndarray, bool]:
    """Simultaneous Aberth-Ehrlich iteration on float coefficients.

    Returns ``(roots, converged)``.  Not used for any decision.
    """
    n = p.degree
    if n < 1:
        return np.array([], dtype=complex), True
    c = np.array([float(x) for x in p.coeffs], dtype=float) / float(p.lc)
    dc = np.arange(1, n + 1) * c[1:]
    # Fujiwara bound on the root moduli
    radius = 2 * max(abs(c[n - k]) ** (1 / k) for k in range(1, n + 1))
    if radius == 0:
        return np.zeros(n, dtype=complex), True
    # companion-matrix eigenvalues as the starting point, nudged apart so no
    # two coincide; the circle start is the fallback
    try:
        z = np.roots(c[::-1]).astype(complex)
        z = z + 1e-10 * radius * np.exp(1j * (np.arange(n) + 0.4))
    except np.linalg.LinAlgError:
        z = 0.5 * radius * np.exp(1j * (2 * np.pi * np.arange(n) / n + 0.4))
    converged = False
    for _ in range(max_iter):
        pv = np.polynomial.polynomial.polyval(z, c)
        dv = np.polynomial.polynomial.polyval(z, dc)
        with np.errstate(divide="ignore", invalid="ignore"):
            ratio = pv / dv
            diff = z[:, None] - z[None, :]
            np.fill_diagonal(diff, 1)
            inv = 1 / diff
            np.fill_diagonal(inv, 0)
            w = ratio / (1 - ratio * inv.sum(axis=1))
        w = np.where(np.isfinite(w), w, 0)
        z = z - w
        if np.all(np.abs(w) <= tol * np.maximum(1, np.abs(z))):
            converged = True
            break
    return z, converged


# classification ----------------------------------------------------------


@dataclass(frozen=True)
class RootLocationReport:
    degree: int
    on_unit_circle: int
    off_unit_circle: int
    spectral_radius_bracket: Interval
    cyclotomic_indices: tuple[int, ...] = field(default=())
    bracket_is_exact: bool = True

    @property
    def all_on_circle(self) -> bool:
        return self.off_unit_circle == 0

    @property
    def is_rho_one(self) -> bool:
        return self.off_unit_circle == 0

    def to_dict(self) -> dict:
        lo, hi = self.spectral_radius_bracket
        return {
            "degree": self.degree,
            "on_circle": self.on_unit_circle,
            "off_circle": self.off_unit_circle,
            "rho_is_one": self.is_rho_one,
            "rho_bracket": [lo.numerator, lo.denominator, hi.numerator, hi.denominator],
            "cyclotomic_indices": list(self.cyclotomic_indices),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def circle_census(p: IntPoly) -> tuple[int, int]:
    """(on_circle, off_circle) root counts of a self-reciprocal p, exact."""
    split = split_parity(p)
    inside = 0
    if split.core.degree >= 1:
        inside = count_real_roots(split.core, -2, 2, with_multiplicity=True)
    on = split.epsilon + 2 * inside
    return on, p.degree - on


def classify_self_reciprocal(
    p: IntPoly, tol: Fraction = DEFAULT_TOL, with_cyclotomic: bool = True
) -> RootLocationReport:
    if p.is_zero() or not is_self_reciprocal(p):
        raise ValueError("polynomial is not self-reciprocal")
    on, off = circle_census(p)
    indices: tuple[int, ...] = ()
    if with_cyclotomic:
        indices = tuple(sorted(extract_cyclotomic_part(p).indices))
    if off == 0:
        return RootLocationReport(p.degree, on, off, (Fraction(1), Fraction(1)), indices)
    bracket, exact = _spectral_radius_bracket(p, Fraction(tol))
    return RootLocationReport(p.degree, on, off, bracket, indices, exact)


def _spectral_radius_bracket(p: IntPoly, tol: Fraction) -> tuple[Interval, bool]:
    core = split_parity(p).core
    sq = squarefree_part(core)
    # a real core root x with |x| > 2 gives real roots t of p with
    # |t| = (|x| + sqrt(x^2 - 4)) / 2, increasing in |x|
    big = root_bound(sq) + 1
    above = isolate_real_roots(sq, width=big, lo=2, hi=big)
    below = isolate_real_roots(sq, width=big, lo=-big, hi=-2)
    top_pos = above[-1] if above else None
    top_neg = below[0] if below else None
    brackets = []
    if top_pos is not None:
        brackets.append(_joukowski_bracket(sq, top_pos, tol))
    if top_neg is not None:
        brackets.append(_joukowski_bracket(sq, top_neg, tol))
    real_best = None
    if brackets:
        # rho = max of the candidates; width stays <= tol
        real_best = (max(b[0] for b in brackets), max(b[1] for b in brackets))
    if count_real_roots(core, with_multiplicity=True) == core.degree:
        return real_best, True
    # non-real core roots: their modulus comes from the numeric refiner
    # multiple roots stall Aberth, so iterate on the exact squarefree part
    z, ok = aberth_roots(squarefree_part(p))
    rho = float(np.max(np.abs(z)))
    slack = max(1e-9 * rho, 1e-12) if ok else 1e-3 * rho
    num = (Fraction(rho - slack), Fraction(rho + slack))
    if real_best is None or num[0] > real_best[1]:
        return num, False
    if real_best[0] >= num[1]:
        return real_best, True
    return (max(num[0], real_best[0]), max(num[1], real_best[1])), False


def _joukowski_bracket(p: IntPoly, iv: Interval, tol: Fraction) -> Interval:
    lo, hi = iv
    while True:
        a, b = (lo, hi) if lo > 0 else (-hi, -lo)
        low = _joukowski_lower(a, tol / 4)
        high = _joukowski_upper(b, tol / 4)
        if high - low <= tol:
            return low, high
        lo, hi = refine_root(p, lo, hi, (hi - lo) / 4)


def _sqrt_bounds(x: Fraction, tol: Fraction) -> Interval:
    """Rational lo <= sqrt(x) <= hi with hi - lo <= tol."""
    if x <= 0:
        return Fraction(0), Fraction(0)
    scale = 1
    while Fraction(1, scale) > tol / 4:
        scale *= 2
    # floor(sqrt(x) * scale) via integer square root of x * scale^2
    n = x * scale * scale
    r = math.isqrt(n.numerator // n.denominator)
    return Fraction(r, scale), Fraction(r + 2, scale)


def _joukowski_lower(x: Fraction, tol: Fraction) -> Fraction:
    lo, _ = _sqrt_bounds(x * x - 4, tol)
    return (x + lo) / 2


def _joukowski_upper(x: Fraction, tol: Fraction) -> Fraction:
    _, hi = _sqrt_bounds(x * x - 4, tol)
    return (x + hi) / 2


# eigenvalue location for extended canonical types -----------------------------


def off_circle_bound_check(w) -> int:
    """Number of roots of f^_w off the unit circle (expected: even, <= 4)."""
    from .coxeter import extended_canonical_coxeter

    return circle_census(extended_canonical_coxeter(w))[1]


def monotonicity_check(w) -> bool:
    """rho = 1 for (..., p_t + 1) implies rho = 1 for (..., p_t).

    The last weight is taken in the order given.
    """
    ws = tuple(w.weights) if hasattr(w, "weights") else tuple(int(p) for p in w)
    up = ws[:-1] + (ws[-1] + 1,)
    if off_circle_bound_check(up) != 0:
        return True
    return off_circle_bound_check(ws) == 0
