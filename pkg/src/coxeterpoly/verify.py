"""Bounded verification suites.

Each suite walks a finite grid, checks an exact identity or root-location
property at every point, and returns a :class:`SuiteResult` carrying the
number of instances, the number of failures and the first counterexample.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable

import networkx as nx

from .chebyshev import u, verify_v_u_identity
from .coxeter import (
    q_poly,
    tree_coxeter,
    verify_f_recursion,
    verify_q_recursion,
    verify_representation,
    weight_types,
)
from .cyclotomic import cyclo, extract_cyclotomic_part, is_cyclotomic_product, represent_unit_disk, totient
from .graphs import Multigraph, charpoly, path, tree_charpoly
from .polyring import ONE, IntPoly, compose_T2, product
from .spectra import interlacing_check, sign_alternation_check
from .symmetry import symmetrize


@dataclass(frozen=True)
class SuiteResult:
    suite: str
    checked: int
    failures: int
    counterexample: str | None = None
    details: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.failures == 0

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "ok": self.ok,
            "checked": self.checked,
            "failures": self.failures,
            "counterexample": self.counterexample,
            "details": self.details,
        }


class _Tally:
    def __init__(self):
        self.checked = 0
        self.failures = 0
        self.first: str | None = None

    def record(self, ok: bool, label: Callable[[], str]):
        self.checked += 1
        if not ok:
            self.failures += 1
            if self.first is None:
                self.first = label()

    def result(self, suite: str, **details) -> SuiteResult:
        return SuiteResult(suite, self.checked, self.failures, self.first, details)


def _grid(max_sum: int, max_t: int | None, max_weight: int | None, ladder: bool = False):
    for w in weight_types(max_sum, max_t, max_weight):
        if ladder and w.weights[-1] < 2:
            continue
        yield w


def suite_representation(max_sum: int = 24, max_t: int | None = 6, max_weight: int | None = 8) -> SuiteResult:
    tally = _Tally()
    for w in _grid(max_sum, max_t, max_weight):
        tally.record(verify_representation(w), lambda: f"representation fails for {w}")
    return tally.result("representation")


def suite_recursion(
    max_sum: int = 24, max_t: int | None = 6, max_weight: int | None = 8, form: str = "one-point"
) -> SuiteResult:
    """f^ recursion in ``form`` and the q recursion, for every type with p_t >= 2."""
    tally = _Tally()
    f_fail = q_fail = 0
    for w in _grid(max_sum, max_t, max_weight, ladder=True):
        f_ok = verify_f_recursion(w, form)
        q_ok = verify_q_recursion(w)
        f_fail += not f_ok
        q_fail += not q_ok
        tally.record(
            f_ok and q_ok,
            lambda: f"{w}: f^ recursion ({form}) {'ok' if f_ok else 'fails'}, "
            f"q recursion {'ok' if q_ok else 'fails'}",
        )
    return tally.result("recursion", form=form, f_failures=f_fail, q_failures=q_fail)


def trees(max_vertices: int):
    """All unlabeled trees with 1..max_vertices vertices, as Multigraphs."""
    if max_vertices >= 1:
        yield Multigraph(1, ((0,),))
    for n in range(2, max_vertices + 1):
        for t in nx.nonisomorphic_trees(n):
            yield Multigraph.from_edges(n, sorted(tuple(sorted(e)) for e in t.edges()))


def suite_acampo(max_vertices: int = 10) -> SuiteResult:
    """compose_T2(tree_coxeter(g)) == symmetrize(charpoly(g)) on every tree."""
    tally = _Tally()
    for g in trees(max_vertices):
        chi = charpoly(g)
        ok = compose_T2(tree_coxeter(g)) == symmetrize(chi) and tree_charpoly(g) == chi
        tally.record(ok, lambda: f"tree {g.to_json()}")
    return tally.result("acampo", max_vertices=max_vertices)


def suite_interlacing(max_sum: int = 24, max_t: int | None = 6, max_weight: int | None = 8) -> SuiteResult:
    """Root interlacing of q_(..., p) inside the gaps of q_(..., p+1), and sign
    alternation of q_(..., p+1), q_(..., p-1) at the real roots of q_(..., p)."""
    tally = _Tally()
    inter_fail = alt_fail = 0
    for w in _grid(max_sum, max_t, max_weight, ladder=True):
        ws = w.weights
        down, mid, up = (q_poly(ws[:-1] + (ws[-1] + d,)) for d in (-1, 0, 1))
        inter = interlacing_check(mid, up)
        alt = sign_alternation_check(down, mid, up)
        inter_fail += not inter
        alt_fail += not alt
        tally.record(
            inter and alt,
            lambda: f"{w}: interlacing {'ok' if inter else 'fails'}, "
            f"sign alternation {'ok' if alt else 'fails'}",
        )
    return tally.result("interlacing", interlacing_failures=inter_fail, alternation_failures=alt_fail)


def suite_chebyshev(max_n: int = 200, max_path: int = 100) -> SuiteResult:
    tally = _Tally()
    for n in range(max_n + 1):
        tally.record(verify_v_u_identity(n), lambda: f"v_{n + 1}(T^2) != u_{n}*")
    tally.record(u(0) == ONE, lambda: "u_0 != 1")
    for n in range(1, max_path + 1):
        tally.record(tree_charpoly(path(n)) == u(n), lambda: f"chi(path {n}) != u_{n}")
    return tally.result("chebyshev")


@lru_cache(maxsize=None)
def _index_pool(max_degree: int) -> tuple[int, ...]:
    # totient(n) >= sqrt(n / 2) bounds the search
    return tuple(n for n in range(2, 2 * max_degree * max_degree + 3) if totient(n) <= max_degree)


def random_cyclotomic_product(rng: random.Random, max_degree: int) -> tuple[IntPoly, list[int]]:
    """A product of cyclo(n), n >= 2: the degree is drawn uniformly from
    1..max_degree and filled with random factors."""
    pool = _index_pool(max_degree)
    target = rng.randint(1, max_degree)
    indices: list[int] = []
    deg = 0
    while True:
        fits = [n for n in pool if deg + totient(n) <= target]
        if not fits:
            break
        n = rng.choice(fits)
        indices.append(n)
        deg += totient(n)
    return product(cyclo(n) for n in indices), sorted(indices)


def suite_kronecker(samples: int = 500, max_degree: int = 40, seed: int = 0, min_fraction: float = 0.95) -> SuiteResult:
    """Round trip through represent_unit_disk on random cyclotomic products,
    plus a perturbation check that extraction does not over-claim."""
    rng = random.Random(seed)
    tally = _Tally()
    nonconstant = 0
    for _ in range(samples):
        p, indices = random_cyclotomic_product(rng, max_degree)
        ok = (
            is_cyclotomic_product(p)
            and sorted(extract_cyclotomic_part(p).indices) == indices
            and compose_T2(p) == symmetrize(represent_unit_disk(p))
        )
        tally.record(ok, lambda: f"round trip fails for cyclotomic indices {indices}")
        k = rng.randrange(p.degree)
        perturbed = p + IntPoly.monomial(k)
        if extract_cyclotomic_part(perturbed).remainder.degree >= 1:
            nonconstant += 1
    fraction = nonconstant / samples if samples else 1.0
    perturb_ok = fraction >= min_fraction
    failures = tally.failures + (0 if perturb_ok else 1)
    first = tally.first
    if first is None and not perturb_ok:
        first = f"only {fraction:.3f} of perturbed products keep a non-constant remainder"
    return SuiteResult(
        "kronecker",
        tally.checked,
        failures,
        first,
        {"seed": seed, "perturbed_nonconstant_fraction": fraction},
    )


SUITES: dict[str, Callable[..., SuiteResult]] = {
    "representation": suite_representation,
    "recursion": suite_recursion,
    "acampo": suite_acampo,
    "interlacing": suite_interlacing,
    "chebyshev": suite_chebyshev,
    "kronecker": suite_kronecker,
}


def run_suite(name: str, **bounds) -> SuiteResult:
    try:
        fn = SUITES[name]
    except KeyError:
        raise ValueError(f"unknown suite {name!r}; expected one of {sorted(SUITES)}") from None
    return fn(**bounds)
