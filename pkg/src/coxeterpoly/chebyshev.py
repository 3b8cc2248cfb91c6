"""Normalized Chebyshev polynomials of the second kind.

``u(n)`` is monic of degree n, given by u_0 = 1, u_1 = T and
u_{n+1} = T u_n - u_{n-1}.  It equals 2 U_n(T/2) and is the characteristic
polynomial of the path graph on n vertices.

The trigonometric definition is not used anywhere; the recursion is exact.
Note on indexing: the identity actually used is v_{n+1}(T^2) = u_n*(T), so
u_n represents v_{n+1} (not v_n).
"""

from __future__ import annotations

from functools import lru_cache

from .cyclotomic import v
from .polyring import IntPoly, compose_T2
from .symmetry import symmetrize


@lru_cache(maxsize=None)
def u(n: int) -> IntPoly:
    if n < 0:
        raise ValueError("Chebyshev index must be non-negative")
    if n == 0:
        return IntPoly((1,))
    if n == 1:
        return IntPoly((0, 1))
    # iterate upward so deep indices never recurse
    prev, cur = IntPoly((1,)), IntPoly((0, 1))
    for k in range(1, n):
        prev, cur = cur, cur.shift(1) - prev
    return cur


def verify_v_u_identity(n: int) -> bool:
    """Check v_{n+1}(T^2) == u_n*(T) exactly."""
    return compose_T2(v(n + 1)) == symmetrize(u(n))
