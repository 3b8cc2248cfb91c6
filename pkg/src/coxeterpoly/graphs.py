"""Undirected multigraphs and their adjacency characteristic polynomials.

Two independent routes to chi_G(T) = det(T I - A(G)):

* :func:`charpoly` runs Berkowitz's division-free algorithm on the integer
  adjacency matrix and works for every multigraph;
* :func:`tree_charpoly` uses leaf deletion, chi_G = T chi_{G-a} - chi_{G-a-b}
  for a leaf a with neighbour b, and only accepts simple trees.

Deciding whether an arbitrary polynomial is of graphical type is not
attempted.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .polyring import ONE, IntPoly


@dataclass(frozen=True)
class Multigraph:
    n: int
    adj: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        adj = tuple(tuple(int(x) for x in row) for row in self.adj)
        if len(adj) != self.n or any(len(row) != self.n for row in adj):
            raise ValueError("adjacency matrix must be n x n")
        for i in range(self.n):
            if adj[i][i]:
                raise ValueError("loops are not allowed")
            for j in range(i + 1, self.n):
                if adj[i][j] != adj[j][i]:
                    raise ValueError("adjacency matrix must be symmetric")
                if adj[i][j] < 0:
                    raise ValueError("edge multiplicities must be non-negative")
        object.__setattr__(self, "adj", adj)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> Multigraph:
        a = [[0] * n for _ in range(n)]
        for e in edges:
            i, j = e[0], e[1]
            m = e[2] if len(e) > 2 else 1
            if i == j:
                raise ValueError("loops are not allowed")
            if not (0 <= i < n and 0 <= j < n):
                raise ValueError(f"edge ({i}, {j}) out of range")
            if m < 1:
                raise ValueError("edge multiplicity must be >= 1")
            a[i][j] += m
            a[j][i] += m
        return cls(n, tuple(map(tuple, a)))

    @classmethod
    def from_json(cls, text: str) -> Multigraph:
        data = json.loads(text)
        return cls.from_edges(int(data["n"]), data.get("edges", []))

    def edges(self) -> list[tuple[int, int, int]]:
        return [
            (i, j, self.adj[i][j])
            for i in range(self.n)
            for j in range(i + 1, self.n)
            if self.adj[i][j]
        ]

    def to_json(self) -> str:
        return json.dumps(
            {"n": self.n, "edges": [list(e) for e in self.edges()]},
            separators=(",", ":"),
        )

    def neighbours(self, i: int) -> list[int]:
        return [j for j, m in enumerate(self.adj[i]) if m]

    def edge_count(self) -> int:
        return sum(m for _, _, m in self.edges())

    def induced(self, vertices: Sequence[int]) -> Multigraph:
        vs = list(vertices)
        return Multigraph(len(vs), tuple(tuple(self.adj[i][j] for j in vs) for i in vs))

    def disjoint_union(self, other: Multigraph) -> Multigraph:
        edges = self.edges() + [(i + self.n, j + self.n, m) for i, j, m in other.edges()]
        return Multigraph.from_edges(self.n + other.n, edges)


# builders ------------------------------------------------------------------


def path(n: int) -> Multigraph:
    """The Dynkin graph A_n: 0 - 1 - ... - (n-1)."""
    if n < 0:
        raise ValueError("path length must be >= 0")
    return Multigraph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def star(weights: Sequence[int]) -> Multigraph:
    """Star [p_1, ..., p_t]: a centre (vertex 0) with arms of p_i - 1 vertices.

    Arm i occupies consecutive labels after the previous arms, nearest the
    centre first, matching the (i, 2), ..., (i, p_i) labelling.
    """
    if len(weights) < 1 or any(p < 1 for p in weights):
        raise ValueError("star needs t >= 1 weights, each >= 1")
    edges = []
    nxt = 1
    for p in weights:
        prev = 0
        for _ in range(p - 1):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return Multigraph.from_edges(nxt, edges)


def kronecker_graph(s: int) -> Multigraph:
    """K_s: two vertices joined by s parallel edges."""
    if s < 1:
        raise ValueError("K_s requires s >= 1")
    return Multigraph.from_edges(2, [(0, 1, s)])


def dynkin(family: str, n: int) -> Multigraph:
    family = family.upper()
    if family == "A":
        if n < 1:
            raise ValueError("A_n requires n >= 1")
        return path(n)
    if family == "D":
        if n < 4:
            raise ValueError("D_n requires n >= 4")
        return star((2, 2, n - 2))
    if family == "E":
        if n not in (6, 7, 8):
            raise ValueError("E_n requires n in {6, 7, 8}")
        return star((2, 3, n - 3))
    raise ValueError(f"unknown Dynkin family {family!r}")


# predicates ----------------------------------------------------------------


def _components(g: Multigraph, vertices: Iterable[int]) -> list[list[int]]:
    remaining = set(vertices)
    comps = []
    while remaining:
        start = min(remaining)
        stack, comp = [start], []
        remaining.discard(start)
        while stack:
            x = stack.pop()
            comp.append(x)
            for y in g.neighbours(x):
                if y in remaining:
                    remaining.discard(y)
                    stack.append(y)
        comps.append(sorted(comp))
    return comps


def is_connected(g: Multigraph) -> bool:
    return len(_components(g, range(g.n))) <= 1


def is_bipartite(g: Multigraph) -> bool:
    colour: dict[int, int] = {}
    for start in range(g.n):
        if start in colour:
            continue
        colour[start] = 0
        stack = [start]
        while stack:
            x = stack.pop()
            for y in g.neighbours(x):
                if y not in colour:
                    colour[y] = 1 - colour[x]
                    stack.append(y)
                elif colour[y] == colour[x]:
                    return False
    return True


def is_tree(g: Multigraph) -> bool:
    """Simple, connected and acyclic (at least one vertex)."""
    if g.n == 0:
        return False
    if any(m > 1 for _, _, m in g.edges()):
        return False
    return is_connected(g) and g.edge_count() == g.n - 1


# characteristic polynomials -------------------------------------------------


def charpoly_matrix(a: Sequence[Sequence[int]]) -> IntPoly:
    """det(T I - A) for a square integer matrix, by Berkowitz's algorithm."""
    n = len(a)
    if n == 0:
        return ONE
    # descending coefficients of the characteristic polynomial of the
    # leading r x r block
    c = [1, -a[0][0]]
    for r in range(1, n):
        row = a[r][:r]
        vec = [a[i][r] for i in range(r)]
        toeplitz = [1, -a[r][r]]
        for _ in range(r):
            toeplitz.append(-sum(x * y for x, y in zip(row, vec)))
            vec = [sum(a[i][j] * vec[j] for j in range(r)) for i in range(r)]
        c = [
            sum(toeplitz[i - j] * c[j] for j in range(len(c)) if 0 <= i - j < len(toeplitz))
            for i in range(r + 2)
        ]
    return IntPoly(tuple(reversed(c)))


def charpoly(g: Multigraph) -> IntPoly:
    return charpoly_matrix(g.adj)


def leaf_recursion(
    g: Multigraph,
    step: Callable[[IntPoly, IntPoly], IntPoly],
    single: IntPoly,
) -> IntPoly:
    """Evaluate a forest invariant through leaf deletion.

    ``step(value(G - a), value(G - a - b))`` gives the value of a component
    with leaf a and neighbour b; disconnected vertex sets multiply.  Results
    are memoised per vertex set, which keeps paths and stars polynomial.
    """
    if not is_tree(g):
        raise ValueError("leaf recursion requires a simple tree")
    memo: dict[frozenset, IntPoly] = {}

    def value(vs: frozenset) -> IntPoly:
        if not vs:
            return ONE
        hit = memo.get(vs)
        if hit is not None:
            return hit
        comps = _components_within(g, vs)
        if len(comps) > 1:
            out = ONE
            for comp in comps:
                out = out * value(frozenset(comp))
        elif len(vs) == 1:
            out = single
        else:
            a = max(x for x in vs if _degree_within(g, x, vs) == 1)
            (b,) = [y for y in g.neighbours(a) if y in vs]
            out = step(value(vs - {a}), value(vs - {a, b}))
        memo[vs] = out
        return out

    return value(frozenset(range(g.n)))


def _degree_within(g: Multigraph, x: int, vs: frozenset) -> int:
    return sum(1 for y in g.neighbours(x) if y in vs)


def _components_within(g: Multigraph, vs: frozenset) -> list[list[int]]:
    remaining = set(vs)
    comps = []
    while remaining:
        start = remaining.pop()
        stack, comp = [start], [start]
        while stack:
            x = stack.pop()
            for y in g.neighbours(x):
                if y in remaining:
                    remaining.discard(y)
                    stack.append(y)
                    comp.append(y)
        comps.append(comp)
    return comps


_T = IntPoly((0, 1))


def tree_charpoly(g: Multigraph, certified_tree: bool = False) -> IntPoly:
    """Characteristic polynomial of a simple tree via leaf deletion.

    ``certified_tree`` is accepted for interface compatibility; the tree
    check is always performed because the recursion is wrong otherwise.
    """
    return leaf_recursion(g, lambda without_a, without_ab: _T * without_a - without_ab, _T)


def graph_spectral_radius(g: Multigraph, tol: Fraction = Fraction(1, 2**20)) -> tuple[Fraction, Fraction]:
    """Rational bracket of width <= tol around the largest adjacency eigenvalue."""
    from .spectra import largest_real_root_bracket

    if g.n == 0 or not is_connected(g):
        raise ValueError("spectral radius requires a nonempty connected graph")
    return largest_real_root_bracket(charpoly(g), Fraction(tol))
