"""Cyclotomic polynomials, cyclotomic-part extraction and the Kronecker
unit-disk representation.
"""

from __future__ import annotations

import cmath
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache

from .polyring import ONE, IntPoly, compose_T2, divrem, product
from .symmetry import desymmetrize, is_self_reciprocal


@lru_cache(maxsize=None)
def v(n: int) -> IntPoly:
    """(T^n - 1)/(T - 1) = T^(n-1) + ... + T + 1."""
    if n < 1:
        raise ValueError("v(n) requires n >= 1")
    return IntPoly((1,) * n)


def divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


@lru_cache(maxsize=None)
def totient(n: int) -> int:
    result, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


@lru_cache(maxsize=None)
def cyclo(n: int) -> IntPoly:
    """The n-th cyclotomic polynomial, by exact division of T^n - 1."""
    if n < 1:
        raise ValueError("cyclotomic index must be >= 1")
    if n == 1:
        return IntPoly((-1, 1))
    acc = v(n)
    for d in divisors(n)[1:-1]:
        acc, r = divrem(acc, cyclo(d))
        assert r.is_zero()
    return acc


@dataclass(frozen=True)
class CyclotomicPart:
    """``source == prod(cyclo(n) for n in indices) * remainder``."""

    indices: tuple[int, ...]
    remainder: IntPoly

    def counts(self) -> Counter:
        return Counter(self.indices)

    def cyclotomic_product(self) -> IntPoly:
        return product(cyclo(n) for n in self.indices)


@lru_cache(maxsize=None)
def _candidates(max_degree: int) -> tuple[int, ...]:
    # totient(n) >= sqrt(n/2), so totient(n) <= d forces n <= 2 d^2
    bound = 2 * max_degree * max_degree
    return tuple(n for n in range(1, bound + 1) if totient(n) <= max_degree)


@lru_cache(maxsize=None)
def _primitive_root(n: int) -> complex:
    return cmath.exp(2j * cmath.pi / n)


def _may_vanish_at_root_of_unity(p: IntPoly, n: int) -> bool:
    # float prefilter: rounding error of Horner at |z| = 1 is far below
    # 1e-6 * sum|c|, so a larger value proves phi_n does not divide p
    scale = sum(abs(c) for c in p.coeffs)
    if scale > 2**50:
        return True
    z = _primitive_root(n)
    acc = 0j
    for c in reversed(p.coeffs):
        acc = acc * z + c
    return abs(acc) <= 1e-6 * scale


def extract_cyclotomic_part(p: IntPoly) -> CyclotomicPart:
    """Strip every cyclotomic factor from p, to full multiplicity."""
    if p.is_zero():
        raise ValueError("cannot extract from the zero polynomial")
    indices = []
    rem = p
    if p.degree > 0:
        for n in _candidates(p.degree):
            if totient(n) > rem.degree:
                continue
            phi = cyclo(n)
            while rem.degree >= phi.degree and _may_vanish_at_root_of_unity(rem, n):
                q, r = divrem(rem, phi)
                if not r.is_zero():
                    break
                indices.append(n)
                rem = q
    return CyclotomicPart(tuple(indices), rem)


def is_cyclotomic_product(p: IntPoly) -> bool:
    if p.is_zero() or p.lc != 1:
        raise ValueError("is_cyclotomic_product requires a monic polynomial")
    return extract_cyclotomic_part(p).remainder == ONE


@lru_cache(maxsize=None)
def representing_factor(n: int) -> IntPoly:
    """f_n with f_n* = cyclo(n)(T^2); divides u_{n-1}."""
    from .chebyshev import u

    if n < 2:
        raise ValueError("cyclo(1) = T - 1 is not representable; need n >= 2")
    f = desymmetrize(compose_T2(cyclo(n)))
    if not divrem(u(n - 1), f)[1].is_zero():
        raise AssertionError(f"representing factor of cyclo({n}) does not divide u_{n - 1}")
    return f


def represent_unit_disk(p: IntPoly) -> IntPoly:
    """q with p(T^2) = q*(T), for monic p with all roots in the closed unit
    disk except 1 (equivalently a cyclotomic product without T - 1).
    """
    if p.is_zero() or p.lc != 1:
        raise ValueError("represent_unit_disk requires a monic polynomial")
    part = extract_cyclotomic_part(p)
    if part.remainder != ONE:
        raise ValueError("not a product of cyclotomic factors: it has roots off the unit circle")
    if 1 in part.indices:
        raise ValueError("the factor T - 1 (root 1) cannot be represented")
    return product(representing_factor(n) for n in part.indices)


@dataclass(frozen=True)
class SrFactor:
    """One factor of a self-reciprocal decomposition.

    ``kind`` is ``"cyclotomic"`` (index n >= 2), ``"double_one"`` for a
    (T - 1)^2 block, or ``"atomic"`` for the unfactored non-cyclotomic rest.
    """

    poly: IntPoly
    kind: str
    index: int | None = field(default=None)

    @property
    def flagged(self) -> bool:
        return self.kind == "atomic"


def sr_decompose_cyclotomic(p: IntPoly) -> list[SrFactor]:
    if p.is_zero() or p.lc != 1:
        raise ValueError("sr_decompose_cyclotomic requires a monic polynomial")
    if not is_self_reciprocal(p):
        raise ValueError("polynomial is not self-reciprocal")
    part = extract_cyclotomic_part(p)
    counts = part.counts()
    out = []
    ones = counts.pop(1, 0)
    # a self-reciprocal polynomial has T - 1 to even multiplicity
    assert ones % 2 == 0
    out.extend(SrFactor(cyclo(1) ** 2, "double_one", 1) for _ in range(ones // 2))
    for n in sorted(counts):
        out.extend(SrFactor(cyclo(n), "cyclotomic", n) for _ in range(counts[n]))
    if part.remainder != ONE:
        out.append(SrFactor(part.remainder, "atomic"))
    return out
