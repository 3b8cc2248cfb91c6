"""Self-reciprocal polynomials and symmetrization.

For a polynomial q of degree k, its symmetrization is

    q*(T) = T^k q(T + 1/T) = sum_j c_j T^(k-j) (T^2 + 1)^j,

a self-reciprocal polynomial of degree 2k.  Every self-reciprocal p of even
degree is q* for a unique integral q; odd-degree ones carry a factor T + 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .polyring import (
    IntPoly,
    compose_T2,
    divrem,
    uncompose_T2,
)

_T_PLUS_ONE = IntPoly((1, 1))


@dataclass(frozen=True)
class ParitySplit:
    """``p = (T + 1)^epsilon * symmetrize(core)``."""

    epsilon: int
    core: IntPoly

    def reconstruct(self) -> IntPoly:
        return _T_PLUS_ONE**self.epsilon * symmetrize(self.core)


def is_self_reciprocal(p: IntPoly) -> bool:
    """Coefficient palindrome test, i.e. p(T) == T^deg p(1/T)."""
    if p.is_zero():
        raise ValueError("self-reciprocity is undefined for the zero polynomial")
    return p.coeffs == p.coeffs[::-1]


@lru_cache(maxsize=None)
def _t2_plus_one_power(j: int) -> IntPoly:
    return IntPoly((1, 0, 1)) ** j


def symmetrize(q: IntPoly) -> IntPoly:
    if q.is_zero():
        raise ValueError("cannot symmetrize the zero polynomial")
    k = q.degree
    out = [0] * (2 * k + 1)
    for j, c in enumerate(q.coeffs):
        if not c:
            continue
        base = k - j
        for i, b in enumerate(_t2_plus_one_power(j).coeffs):
            if b:
                out[base + i] += c * b
    return IntPoly(tuple(out))


def desymmetrize(p: IntPoly) -> IntPoly:
    """The unique integral q with ``symmetrize(q) == p``.

    Peels terms off from the top degree down; only multiplications occur, so
    integrality of the result needs no checking.
    """
    if p.is_zero():
        raise ValueError("cannot desymmetrize the zero polynomial")
    if not is_self_reciprocal(p):
        raise ValueError("polynomial is not self-reciprocal")
    n = p.degree
    if n % 2:
        raise ValueError("odd-degree self-reciprocal: factor out (T+1) first")
    k = n // 2
    rem = list(p.coeffs)
    q = [0] * (k + 1)
    for j in range(k, -1, -1):
        c = rem[k + j]
        q[j] = c
        if c:
            for i, b in enumerate(_t2_plus_one_power(j).coeffs):
                rem[k - j + i] -= c * b
    assert not any(rem), "desymmetrize recurrence left a remainder"
    return IntPoly(tuple(q))


def split_parity(p: IntPoly) -> ParitySplit:
    if not is_self_reciprocal(p):
        raise ValueError("polynomial is not self-reciprocal")
    eps = p.degree % 2
    if eps:
        p, r = divrem(p, _T_PLUS_ONE)
        assert r.is_zero(), "odd-degree self-reciprocal polynomial not divisible by T+1"
    return ParitySplit(eps, desymmetrize(p))


def even_decompress(f: IntPoly) -> IntPoly:
    """The hat map: for f in Z[T^2], return g with g(T^2) = f*(T).

    Multiplicative: ``even_decompress(f * g) == even_decompress(f) * even_decompress(g)``.
    """
    if f.is_zero():
        raise ValueError("input must be nonzero")
    uncompose_T2(f)  # raises when an odd coefficient is present
    return uncompose_T2(symmetrize(f))


def is_represented_by(f: IntPoly, q: IntPoly) -> bool:
    """True when f(T^2) == q*(T)."""
    return compose_T2(f) == symmetrize(q)

