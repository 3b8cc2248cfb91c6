"""Dense univariate polynomials with arbitrary-precision coefficients.

Coefficients are stored ascending by power: ``IntPoly((0, -2, 0, 1))`` is
``T^3 - 2*T``.  Values are immutable and normalized (no trailing zeros).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd as igcd
from typing import Iterable, Sequence, Union

Rational = Union[int, Fraction]


class _MinusInfinity:
    """Degree of the zero polynomial.

    Compares below every integer but supports no arithmetic, so code that
    forgets the zero case fails loudly instead of computing with ``-1``.
    """

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __lt__(self, other):
        return other is not self

    def __le__(self, other):
        return True

    def __gt__(self, other):
        return False

    def __ge__(self, other):
        return other is self

    def __repr__(self):
        return "-inf"


MINUS_INFINITY = _MinusInfinity()


def _strip(coeffs: Sequence) -> tuple:
    n = len(coeffs)
    while n and not coeffs[n - 1]:
        n -= 1
    return tuple(coeffs[:n])


@dataclass(frozen=True)
class IntPoly:
    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        cs = tuple(self.coeffs)
        for c in cs:
            if not isinstance(c, int) or isinstance(c, bool):
                raise TypeError(f"integer coefficient expected, got {c!r}")
        object.__setattr__(self, "coeffs", _strip(cs))

    # construction -----------------------------------------------------

    @classmethod
    def zero(cls) -> IntPoly:
        return cls(())

    @classmethod
    def one(cls) -> IntPoly:
        return cls((1,))

    @classmethod
    def const(cls, c: int) -> IntPoly:
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> IntPoly:
        return cls((0,) * k + (c,))

    @classmethod
    def T(cls) -> IntPoly:
        return cls((0, 1))

    @classmethod
    def from_json(cls, text: str) -> IntPoly:
        data = json.loads(text)
        if not isinstance(data, list):
            raise ValueError("polynomial must be a JSON array of integers")
        return cls(tuple(data))

    def to_json(self) -> str:
        return json.dumps(list(self.coeffs), separators=(",", ":"))

    # basic properties -------------------------------------------------

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else MINUS_INFINITY

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return self.lc == 1

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    # ring operations --------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        res = list(a)
        for i, c in enumerate(b):
            res[i] += c
        return IntPoly(tuple(res))

    __radd__ = __add__

    def __neg__(self) -> IntPoly:
        return IntPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly()
        res = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    res[i + j] += x * y
        return IntPoly(tuple(res))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> IntPoly:
        if k < 0:
            raise ValueError("negative power")
        result, base = IntPoly.one(), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, c: int) -> IntPoly:
        return IntPoly(tuple(c * x for x in self.coeffs))

    def shift(self, k: int) -> IntPoly:
        """Multiply by T^k."""
        if not self.coeffs:
            return self
        return IntPoly((0,) * k + self.coeffs)

    def exact_div_const(self, c: int) -> IntPoly:
        out = []
        for x in self.coeffs:
            q, r = divmod(x, c)
            if r:
                raise ArithmeticError(f"{c} does not divide {self}")
            out.append(q)
        return IntPoly(tuple(out))

    # evaluation and substitution -------------------------------------

    def __call__(self, x: Rational) -> Rational:
        return evaluate(self, x)

    def sign_at(self, x: Rational) -> int:
        """Sign of the value at a rational point, computed in integers."""
        if isinstance(x, int):
            num, den = x, 1
        else:
            x = Fraction(x)
            num, den = x.numerator, x.denominator
        # den^deg * p(num/den), homogenized Horner; den > 0 keeps the sign
        acc = 0
        dpow = 1
        for c in reversed(self.coeffs):
            acc = acc * num + c * dpow
            dpow *= den
        return (acc > 0) - (acc < 0)

    def content(self) -> int:
        return reduce(igcd, self.coeffs, 0)

    def primitive(self) -> IntPoly:
        """Primitive part with positive leading coefficient."""
        if not self.coeffs:
            return self
        c = self.content()
        if self.lc < 0:
            c = -c
        return IntPoly(tuple(x // c for x in self.coeffs))

    def reversed(self) -> IntPoly:
        """T^deg * p(1/T)."""
        return IntPoly(tuple(reversed(self.coeffs)))

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)})"

    def __str__(self) -> str:
        return pretty(self)


def _coerce(x):
    if isinstance(x, IntPoly):
        return x
    if isinstance(x, int) and not isinstance(x, bool):
        return IntPoly((x,))
    return NotImplemented


T = IntPoly.T()
ONE = IntPoly.one()
ZERO = IntPoly.zero()


def poly(*coeffs: int) -> IntPoly:
    """Build from ascending coefficients: ``poly(0, -2, 0, 1)`` is T^3 - 2T."""
    return IntPoly(coeffs)


def pretty(p: IntPoly, var: str = "T") -> str:
    """Human-readable form such as ``T^3 - 2*T``; output only."""
    if p.is_zero():
        return "0"
    terms = []
    for k in range(p.degree, -1, -1):
        c = p.coeffs[k]
        if not c:
            continue
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if k == 0:
            body = str(a)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            body = mono if a == 1 else f"{a}*{mono}"
        terms.append((sign, body))
    first_sign, first = terms[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


def add(p: IntPoly, q: IntPoly) -> IntPoly:
    return p + q


def sub(p: IntPoly, q: IntPoly) -> IntPoly:
    return p - q


def mul(p: IntPoly, q: IntPoly) -> IntPoly:
    return p * q


def neg(p: IntPoly) -> IntPoly:
    return -p


def product(polys: Iterable[IntPoly]) -> IntPoly:
    return reduce(lambda a, b: a * b, polys, ONE)


def divrem(p: IntPoly, d: IntPoly) -> tuple[IntPoly, IntPoly]:
    """Division by a monic divisor; both quotient and remainder are integral."""
    if d.is_zero() or d.lc != 1:
        raise ValueError("divisor must be monic nonzero")
    n = d.degree
    rem = list(p.coeffs)
    if len(rem) <= n:
        return ZERO, p
    dc = d.coeffs
    quot = [0] * (len(rem) - n)
    for k in range(len(rem) - 1, n - 1, -1):
        c = rem[k]
        if c:
            quot[k - n] = c
            base = k - n
            for i in range(n):
                if dc[i]:
                    rem[base + i] -= c * dc[i]
            rem[k] = 0
    return IntPoly(tuple(quot)), IntPoly(tuple(rem[:n]))


def divides(d: IntPoly, p: IntPoly) -> bool:
    """Exact divisibility test for a monic ``d``."""
    return divrem(p, d)[1].is_zero()


def exact_quotient(p: IntPoly, d: IntPoly) -> IntPoly:
    """p / d over the integers, where d need not be monic but must divide p."""
    if d.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    if p.is_zero():
        return ZERO
    n = d.degree
    lc = d.lc
    rem = list(p.coeffs)
    if len(rem) - 1 < n:
        raise ArithmeticError("divisor does not divide exactly")
    quot = [0] * (len(rem) - n)
    for k in range(len(rem) - 1, n - 1, -1):
        c = rem[k]
        if c:
            q, r = divmod(c, lc)
            if r:
                raise ArithmeticError("divisor does not divide exactly")
            quot[k - n] = q
            for i in range(n + 1):
                rem[k - n + i] -= q * d.coeffs[i]
    if any(rem):
        raise ArithmeticError("divisor does not divide exactly")
    return IntPoly(tuple(quot))


def pseudo_rem(a: IntPoly, b: IntPoly) -> IntPoly:
    """|lc(b)|^(deg a - deg b + 1) * a mod b.

    The absolute value keeps the result a *positive* multiple of the true
    remainder, which Sturm sequences rely on.
    """
    if b.is_zero():
        raise ZeroDivisionError("pseudo-remainder by zero")
    if a.degree < b.degree:
        return a
    n = b.degree
    lc = b.lc
    sgn = 1 if lc > 0 else -1
    alc = abs(lc)
    rem = list(a.coeffs)
    bc = b.coeffs
    for k in range(len(rem) - 1, n - 1, -1):
        c = rem[k]
        # rem <- alc*rem - sgn*c*T^(k-n)*b eliminates the T^k term
        rem = [alc * x for x in rem]
        if c:
            m = sgn * c
            for i in range(n + 1):
                rem[k - n + i] -= m * bc[i]
        rem[k] = 0
    return IntPoly(tuple(rem[:n]))


def gcd(p: IntPoly, q: IntPoly) -> IntPoly:
    """Primitive gcd with positive leading coefficient (subresultant PRS)."""
    if p.is_zero() and q.is_zero():
        raise ValueError("gcd of two zero polynomials is undefined")
    if p.is_zero():
        return q.primitive()
    if q.is_zero():
        return p.primitive()
    if p.degree < q.degree:
        p, q = q, p
    a, b = p.primitive(), q.primitive()
    g = h = 1
    while True:
        delta = a.degree - b.degree
        r = _signed_prem(a, b)
        if r.is_zero():
            return b.primitive()
        if r.degree == 0:
            return ONE
        a, b = b, r.exact_div_const(g * h**delta)
        g = a.lc
        # h <- g^delta / h^(delta - 1), exact by the subresultant theorem
        if delta:
            h = _exact_div(g**delta, h ** (delta - 1))


def _signed_prem(a: IntPoly, b: IntPoly) -> IntPoly:
    # prem with the signed factor lc(b)^(delta + 1)
    r = pseudo_rem(a, b)
    if b.lc < 0 and (a.degree - b.degree) % 2 == 0:
        r = -r
    return r


def _exact_div(num: int, den: int) -> int:
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError("subresultant scaling not exact")
    return q


def evaluate(p: IntPoly, x: Rational) -> Rational:
    """Horner evaluation; exact for ints and Fractions."""
    acc = 0
    for c in reversed(p.coeffs):
        acc = acc * x + c
    if isinstance(acc, Fraction) and acc.denominator == 1:
        return int(acc)
    return acc


def compose(p: IntPoly, q: IntPoly) -> IntPoly:
    """p(q(T))."""
    acc = ZERO
    for c in reversed(p.coeffs):
        acc = acc * q + c
    return acc


def compose_T2(p: IntPoly) -> IntPoly:
    """p(T^2)."""
    if p.is_zero():
        return p
    out = [0] * (2 * len(p.coeffs) - 1)
    out[::2] = p.coeffs
    return IntPoly(tuple(out))


def is_even_poly(p: IntPoly) -> bool:
    """True when p lies in Z[T^2]."""
    return not any(p.coeffs[1::2])


def uncompose_T2(p: IntPoly) -> IntPoly:
    """Inverse of :func:`compose_T2` on Z[T^2]."""
    if not is_even_poly(p):
        raise ValueError("input must lie in Z[T^2]")
    return IntPoly(p.coeffs[::2])


def derivative(p: IntPoly) -> IntPoly:
    return IntPoly(tuple(i * c for i, c in enumerate(p.coeffs) if i))


def squarefree_part(p: IntPoly) -> IntPoly:
    if p.is_zero():
        raise ValueError("squarefree part of zero polynomial")
    if p.degree == 0:
        return ONE
    g = gcd(p, derivative(p))
    return exact_quotient(p.primitive(), g)


def squarefree_decomposition(p: IntPoly) -> list[tuple[IntPoly, int]]:
    """Yun's algorithm.

    Returns ``[(a_i, i), ...]`` with each ``a_i`` primitive, squarefree,
    pairwise coprime and non-constant, such that ``prod a_i^i`` equals ``p``
    up to an integer constant.
    """
    if p.is_zero():
        raise ValueError("squarefree decomposition of zero polynomial")
    p = p.primitive()
    if p.degree == 0:
        return []
    out = []
    dp = derivative(p)
    a0 = gcd(p, dp)
    b = exact_quotient(p, a0)
    c = exact_quotient(dp, a0) if not dp.is_zero() else ZERO
    d = c - derivative(b)
    i = 1
    while b.degree > 0:
        a = gcd(b, d) if not d.is_zero() else b.primitive()
        if a.degree > 0:
            out.append((a, i))
        b = exact_quotient(b, a)
        c = exact_quotient(d, a) if not d.is_zero() else ZERO
        d = c - derivative(b)
        i += 1
    return out


# rational polynomials -------------------------------------------------


@dataclass(frozen=True)
class RatPoly:
    coeffs: tuple[Fraction, ...] = ()

    def __post_init__(self):
        object.__setattr__(
            self, "coeffs", _strip(tuple(Fraction(c) for c in self.coeffs))
        )

    @classmethod
    def from_int(cls, p: IntPoly) -> RatPoly:
        return cls(p.coeffs)

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else MINUS_INFINITY

    @property
    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: RatPoly) -> RatPoly:
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        res = list(a)
        for i, c in enumerate(b):
            res[i] += c
        return RatPoly(tuple(res))

    def __neg__(self) -> RatPoly:
        return RatPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: RatPoly) -> RatPoly:
        return self + (-other)

    def __mul__(self, other: RatPoly) -> RatPoly:
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return RatPoly()
        res = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                res[i + j] += x * y
        return RatPoly(tuple(res))

    def __call__(self, x: Rational) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def monic(self) -> RatPoly:
        lc = self.lc
        return RatPoly(tuple(c / lc for c in self.coeffs))

    def to_primitive_int(self) -> IntPoly:
        """Clear denominators and strip content; positive leading coefficient."""
        if not self.coeffs:
            return ZERO
        den = 1
        for c in self.coeffs:
            den = den * c.denominator // igcd(den, c.denominator)
        return IntPoly(tuple(int(c * den) for c in self.coeffs)).primitive()

    def divrem(self, d: RatPoly) -> tuple[RatPoly, RatPoly]:
        if d.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        rem = list(self.coeffs)
        n = d.degree
        if len(rem) - 1 < n:
            return RatPoly(), self
        quot = [Fraction(0)] * (len(rem) - n)
        lc = d.lc
        for k in range(len(rem) - 1, n - 1, -1):
            c = rem[k] / lc
            quot[k - n] = c
            if c:
                for i in range(n + 1):
                    rem[k - n + i] -= c * d.coeffs[i]
        return RatPoly(tuple(quot)), RatPoly(tuple(rem[:n]))
