"""Coxeter polynomials of stars, canonical and extended canonical algebras.

Only the weights (p_1, ..., p_t) matter; the canonical-algebra parameters
lambda_3, ..., lambda_t never enter a Coxeter polynomial and are not modelled.
Weight-1 arms are allowed: v_1 = 1, v_0 = 0 and the empty path has
characteristic polynomial 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .chebyshev import u
from .cyclotomic import v
from .graphs import Multigraph, charpoly, kronecker_graph, leaf_recursion, star, tree_charpoly
from .polyring import ZERO, IntPoly, compose_T2, product
from .symmetry import symmetrize

_T = IntPoly((0, 1))
_T_PLUS_ONE = IntPoly((1, 1))
_T_MINUS_ONE_SQ = IntPoly((1, -2, 1))


@dataclass(frozen=True, order=True)
class WeightType:
    """Arm weights, stored sorted non-decreasing."""

    weights: tuple[int, ...]

    def __post_init__(self):
        ws = tuple(sorted(int(p) for p in self.weights))
        if len(ws) < 2:
            raise ValueError("a weight type needs t >= 2 weights")
        if any(p < 1 for p in ws):
            raise ValueError("weights must be integers >= 1")
        object.__setattr__(self, "weights", ws)

    @classmethod
    def of(cls, *weights: int) -> WeightType:
        return cls(tuple(weights))

    @property
    def t(self) -> int:
        return len(self.weights)

    @property
    def total(self) -> int:
        return sum(self.weights)

    @property
    def canonical_vertices(self) -> int:
        return 2 + sum(p - 1 for p in self.weights)

    @property
    def extended_vertices(self) -> int:
        return self.canonical_vertices + 1

    def with_last(self, p: int) -> WeightType:
        return WeightType(self.weights[:-1] + (p,))

    def bumped(self, i: int, delta: int) -> WeightType:
        ws = list(self.weights)
        ws[i] += delta
        return WeightType(tuple(ws))

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.weights)) + ")"


def as_weight_type(w) -> WeightType:
    return w if isinstance(w, WeightType) else WeightType(tuple(w))


def _v(n: int) -> IntPoly:
    return ZERO if n == 0 else v(n)


def one_point_reduction(f_b: IntPoly, f_c: IntPoly) -> IntPoly:
    """(1 + T) f_B - T f_C for a one-point extension by a projective."""
    return _T_PLUS_ONE * f_b - _T * f_c


@lru_cache(maxsize=None)
def _star_coxeter(ws: tuple[int, ...]) -> IntPoly:
    vs = [_v(p) for p in ws]
    total = _T_PLUS_ONE * product(vs)
    arms = ZERO
    for i, p in enumerate(ws):
        arms = arms + _v(p - 1) * product(vs[j] for j in range(len(ws)) if j != i)
    return total - _T * arms


def star_coxeter(w) -> IntPoly:
    return _star_coxeter(as_weight_type(w).weights)


@lru_cache(maxsize=None)
def _canonical_coxeter(ws: tuple[int, ...]) -> IntPoly:
    return _T_MINUS_ONE_SQ * product(v(p) for p in ws)


def canonical_coxeter(w) -> IntPoly:
    """(T - 1)^2 prod v_{p_i}."""
    return _canonical_coxeter(as_weight_type(w).weights)


@lru_cache(maxsize=None)
def _extended(ws: tuple[int, ...]) -> IntPoly:
    return one_point_reduction(_canonical_coxeter(ws), _star_coxeter(ws))


def extended_canonical_coxeter(w) -> IntPoly:
    return _extended(as_weight_type(w).weights)


def path_charpoly(n: int) -> IntPoly:
    """chi of the path [n]; the empty path [0] gives 1."""
    return u(n)


@lru_cache(maxsize=None)
def _star_charpoly(ws: tuple[int, ...]) -> IntPoly:
    return tree_charpoly(star(ws))


@lru_cache(maxsize=None)
def _q_poly(ws: tuple[int, ...]) -> IntPoly:
    chi_k2 = charpoly(kronecker_graph(2))
    arms = product(path_charpoly(p - 1) for p in ws)
    return _T * chi_k2 * arms - _star_charpoly(ws)


def q_poly(w) -> IntPoly:
    """T chi_{K_2} prod chi_{[p_i - 1]} - chi_{[p_1, ..., p_t]}."""
    return _q_poly(as_weight_type(w).weights)


@dataclass(frozen=True)
class CoxeterBundle:
    weight_type: WeightType
    star_poly: IntPoly
    canonical_poly: IntPoly
    extended_poly: IntPoly
    q_poly: IntPoly

    @classmethod
    def of(cls, w) -> CoxeterBundle:
        w = as_weight_type(w)
        return cls(
            w,
            star_coxeter(w),
            canonical_coxeter(w),
            extended_canonical_coxeter(w),
            q_poly(w),
        )


def verify_representation(w) -> bool:
    """Check f_[p](T^2) = chi_[p]*, f_(p)(T^2) = chi_K2* prod chi_[p_i-1]*,
    and f^_(p)(T^2) = q_(p)* exactly."""
    w = as_weight_type(w)
    ws = w.weights
    star_ok = compose_T2(star_coxeter(w)) == symmetrize(_star_charpoly(ws))
    rhs = symmetrize(charpoly(kronecker_graph(2))) * product(
        symmetrize(path_charpoly(p - 1)) for p in ws
    )
    canonical_ok = compose_T2(canonical_coxeter(w)) == rhs
    extended_ok = compose_T2(extended_canonical_coxeter(w)) == symmetrize(q_poly(w))
    return star_ok and canonical_ok and extended_ok


RECURSION_FORMS = ("one-point", "three-term")


def _ladder(w) -> tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]:
    ws = tuple(w.weights) if isinstance(w, WeightType) else tuple(int(p) for p in w)
    last = ws[-1]
    if last < 2:
        raise ValueError("recursion requires p_t >= 2")
    return ws[:-1] + (last - 1,), ws, ws[:-1] + (last + 1,)


def verify_q_recursion(w) -> bool:
    """q_(..., p+1) == T q_(..., p) - q_(..., p-1)."""
    down, mid, up = _ladder(w)
    return q_poly(up) == _T * q_poly(mid) - q_poly(down)


def verify_f_recursion(w, form: str = "one-point") -> bool:
    """Recursion for f^ in the last weight.

    ``"one-point"`` checks f^_(..., p+1) == (1 + T) f^_(..., p) - T f^_(..., p-1),
    the form that actually holds.  ``"three-term"`` checks
    f^_(..., p+1) == T f^_(..., p) - f^_(..., p-1), the Chebyshev-style form;
    it fails for every type since the constant terms come out as +1 and -1.
    """
    down, mid, up = _ladder(w)
    f_up, f_mid, f_down = (extended_canonical_coxeter(x) for x in (up, mid, down))
    if form == "one-point":
        return f_up == one_point_reduction(f_mid, f_down)
    if form == "three-term":
        return f_up == _T * f_mid - f_down
    raise ValueError(f"unknown recursion form {form!r}; expected one of {RECURSION_FORMS}")


def verify_recursion(w, form: str = "one-point") -> bool:
    """Both recursions in the last weight: f^ in the given form, and q.

    With w = (..., p_t), compares the types (..., p_t + 1), (..., p_t) and
    (..., p_t - 1).  The last weight is taken in the order given, so callers
    can recurse on any arm.
    """
    return verify_f_recursion(w, form) and verify_q_recursion(w)


_SINGLE_VERTEX_COXETER = _T_PLUS_ONE


def tree_coxeter(g: Multigraph) -> IntPoly:
    """Coxeter polynomial of a hereditary algebra whose quiver has
    underlying tree g, by repeated one-point reduction at leaves."""
    return leaf_recursion(g, one_point_reduction, _SINGLE_VERTEX_COXETER)


def weight_types(max_sum: int, max_t: int | None = None, max_weight: int | None = None, min_t: int = 2) -> Iterable[WeightType]:
    """Non-decreasing weight tuples with t >= min_t and sum <= max_sum,
    ordered by (sum, weights)."""
    out = []

    def rec(prefix: list[int], lo: int, remaining: int):
        if len(prefix) >= min_t:
            out.append(tuple(prefix))
        if max_t is not None and len(prefix) >= max_t:
            return
        hi = remaining if max_weight is None else min(remaining, max_weight)
        for p in range(lo, hi + 1):
            prefix.append(p)
            rec(prefix, p, remaining - p)
            prefix.pop()

    rec([], 1, max_sum)
    out.sort(key=lambda ws: (sum(ws), ws))
    return [WeightType(ws) for ws in out]

