"""Graphs, vertex sets, masses and coherence predicates.

Everything here works on plain Python sets of integer vertex ids.  Masses are
exact: a mass stores integer numerators over one common denominator, so every
comparison against a rational threshold is exact.
"""
from __future__ import annotations

import itertools
import random
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

__all__ = [
    "Graph", "Mass", "MassedGraph", "Violation", "Coherent", "MassReport",
    "induced_subgraph", "complement", "ball", "bfs_distances", "components",
    "is_connected", "closed_neighbourhood", "is_anticomplete", "covers",
    "check_coherence", "is_dominant", "has_r_centre", "validate_mass",
    "shortest_path",
]


@dataclass(frozen=True)
class Graph:
    """Finite simple graph on vertices ``0..n-1``."""

    n: int
    adj: tuple[frozenset[int], ...]

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match n")
        for v, nb in enumerate(self.adj):
            if v in nb:
                raise ValueError(f"self-loop at {v}")
            for u in nb:
                if not 0 <= u < self.n:
                    raise ValueError(f"vertex {u} out of range")
                if v not in self.adj[u]:
                    raise ValueError(f"asymmetric adjacency {v}-{u}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        nb: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {u}-{v} out of range")
            nb[u].add(v)
            nb[v].add(u)
        return cls(n, tuple(frozenset(s) for s in nb))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, tuple(frozenset() for _ in range(n)))

    @property
    def vertices(self) -> range:
        return range(self.n)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def __repr__(self):
        return f"Graph(n={self.n}, m={sum(map(len, self.adj)) // 2})"


class Mass:
    """Additive mass: ``mu(X) = sum(num[x] for x in X) / den``.

    ``Mass.uniform(n)`` is ``|X|/n``; ``Mass.weighted(ws)`` takes per-vertex
    nonnegative rationals summing to one.
    """

    def __init__(self, num: Iterable[int], den: int, kind: str = "weighted"):
        self.num = tuple(int(x) for x in num)
        self.den = int(den)
        self.kind = kind
        if self.den <= 0 or any(x < 0 for x in self.num):
            raise ValueError("mass weights must be nonnegative")
        if sum(self.num) != self.den:
            raise ValueError("mass weights must sum to 1")

    @classmethod
    def uniform(cls, n: int) -> "Mass":
        if n <= 0:
            raise ValueError("uniform mass needs at least one vertex")
        return cls([1] * n, n, kind="uniform")

    @classmethod
    def weighted(cls, weights: Iterable) -> "Mass":
        ws = [Fraction(w) for w in weights]
        if not ws:
            raise ValueError("empty weight vector")
        den = 1
        for w in ws:
            den = den * w.denominator // _gcd(den, w.denominator)
        return cls([w.numerator * (den // w.denominator) for w in ws], den)

    @property
    def n(self) -> int:
        return len(self.num)

    def weights(self) -> list[Fraction]:
        return [Fraction(x, self.den) for x in self.num]

    def raw(self, X: Iterable[int]) -> int:
        num = self.num
        return sum(num[x] for x in X)

    def __call__(self, X: Iterable[int]) -> Fraction:
        return Fraction(self.raw(X), self.den)

    def restrict(self, Z: list[int]) -> "Mass":
        """Mass on ``G[Z]`` normalised by ``mu(Z)``; ``Z[i]`` becomes vertex ``i``."""
        nums = [self.num[z] for z in Z]
        total = sum(nums)
        if total == 0:
            raise ValueError("cannot normalise a zero-mass set")
        kind = "uniform" if self.kind == "uniform" else "weighted"
        return Mass(nums, total, kind=kind)

    def __eq__(self, other):
        return isinstance(other, Mass) and self.weights() == other.weights()

    def __repr__(self):
        return f"Mass({self.kind}, n={self.n})"


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


@dataclass(frozen=True)
class MassedGraph:
    graph: Graph
    mass: Mass

    def __post_init__(self):
        if self.mass.n != self.graph.n:
            raise ValueError("mass is not indexed by the graph's vertices")

    @classmethod
    def uniform(cls, g: Graph) -> "MassedGraph":
        return cls(g, Mass.uniform(g.n))

    def mu(self, X: Iterable[int]) -> Fraction:
        return self.mass(X)

    @property
    def n(self) -> int:
        return self.graph.n


@dataclass(frozen=True)
class Violation:
    """Witness that a massed graph is not coherent at threshold ``eps``.

    ``kind`` is one of ``heavy-vertex``, ``heavy-neighbourhood``,
    ``heavy-ball`` or ``anticomplete-pair``.
    """

    kind: str
    eps: Fraction
    v: int | None = None
    r: int | None = None
    A: frozenset[int] = frozenset()
    B: frozenset[int] = frozenset()
    masses: tuple[Fraction, ...] = ()

    def __bool__(self):
        return True


@dataclass(frozen=True)
class Coherent:
    heuristic: bool = False


def heavy_vertex(mg: MassedGraph, v: int, eps) -> Violation:
    return Violation("heavy-vertex", Fraction(eps), v=v, masses=(mg.mu([v]),))


def heavy_neighbourhood(mg: MassedGraph, v: int, eps) -> Violation:
    return Violation("heavy-neighbourhood", Fraction(eps), v=v,
                     masses=(mg.mu(mg.graph.adj[v]),))


def heavy_ball(mg: MassedGraph, v: int, r: int, eps) -> Violation:
    return Violation("heavy-ball", Fraction(eps), v=v, r=r,
                     masses=(mg.mu(ball(mg.graph, v, r)),))


def anticomplete_pair(mg: MassedGraph, A, B, eps) -> Violation:
    A, B = frozenset(A), frozenset(B)
    return Violation("anticomplete-pair", Fraction(eps), A=A, B=B,
                     masses=(mg.mu(A), mg.mu(B)))


# -- basic set operations ---------------------------------------------------

def _check_set(g: Graph, X) -> set[int]:
    X = set(X)
    for x in X:
        if not (isinstance(x, int) and 0 <= x < g.n):
            raise ValueError(f"vertex {x!r} out of range")
    return X


def induced_subgraph(g: Graph, X: Iterable[int]) -> tuple[Graph, list[int]]:
    """Return ``G[X]`` relabelled to ``0..|X|-1`` and the list new -> old."""
    order = sorted(_check_set(g, X))
    index = {v: i for i, v in enumerate(order)}
    adj = tuple(frozenset(index[u] for u in g.adj[v] if u in index) for v in order)
    return Graph(len(order), adj), order


def complement(g: Graph) -> Graph:
    allv = frozenset(range(g.n))
    return Graph(g.n, tuple(allv - g.adj[v] - {v} for v in range(g.n)))


def bfs_distances(g: Graph, src, within=None, limit: int | None = None) -> dict[int, int]:
    """Distances from ``src`` (a vertex or a set of vertices) inside ``G[within]``."""
    sources = [src] if isinstance(src, int) else sorted(src)
    dist = {s: 0 for s in sources}
    q = deque(sources)
    adj = g.adj
    while q:
        u = q.popleft()
        d = dist[u]
        if limit is not None and d >= limit:
            continue
        for w in adj[u]:
            if w not in dist and (within is None or w in within):
                dist[w] = d + 1
                q.append(w)
    return dist


def ball(g: Graph, v: int, r: int, within=None) -> set[int]:
    """Vertices at distance at most ``r`` from ``v`` (inside ``G[within]`` if given)."""
    if r < 0:
        raise ValueError("radius must be nonnegative")
    return set(bfs_distances(g, v, within=within, limit=r))


def shortest_path(g: Graph, s: int, t: int, within) -> list[int] | None:
    """A shortest ``s``-``t`` path in ``G[within]``; shortest paths are induced."""
    if s not in within or t not in within:
        return None
    parent = {s: None}
    q = deque([s])
    while q:
        u = q.popleft()
        if u == t:
            break
        for w in sorted(g.adj[u]):
            if w in within and w not in parent:
                parent[w] = u
                q.append(w)
    if t not in parent:
        return None
    path = [t]
    while parent[path[-1]] is not None:
        path.append(parent[path[-1]])
    return path[::-1]


def components(g: Graph, X: Iterable[int]) -> list[list[int]]:
    """Vertex sets of the components of ``G[X]``, ordered by least vertex."""
    X = set(X)
    seen: set[int] = set()
    out = []
    for s in sorted(X):
        if s in seen:
            continue
        comp = bfs_distances(g, s, within=X)
        seen.update(comp)
        out.append(sorted(comp))
    return out


def is_connected(g: Graph, X) -> bool:
    X = set(X)
    if not X:
        return False
    return len(bfs_distances(g, min(X), within=X)) == len(X)


def closed_neighbourhood(g: Graph, X: Iterable[int]) -> set[int]:
    """Vertices that touch ``X``: members of ``X`` and their neighbours."""
    out = set(X)
    for x in list(out):
        out |= g.adj[x]
    return out


def _disjoint(A, B):
    A, B = set(A), set(B)
    if A & B:
        raise ValueError("sets overlap")
    return A, B


def is_anticomplete(g: Graph, A, B) -> bool:
    A, B = _disjoint(A, B)
    return all(not (g.adj[a] & B) for a in A)


def covers(g: Graph, A, B) -> bool:
    """True iff every vertex of ``B`` has a neighbour in ``A``."""
    A, B = _disjoint(A, B)
    return all(g.adj[b] & A for b in B)


def is_dominant(mg: MassedGraph, X, delta) -> bool:
    return mg.mu(closed_neighbourhood(mg.graph, X)) >= delta


def has_r_centre(g: Graph, X, v: int, r: int) -> bool:
    X = set(X)
    if v not in X:
        raise ValueError("centre must lie in X")
    return len(bfs_distances(g, v, within=X, limit=r)) == len(X)


# -- coherence ----------------------------------------------------------------

def check_coherence(mg: MassedGraph, eps, r: int | None = None,
                    exact_pair_limit: int = 15, seed: int = 0,
                    restarts: int = 20) -> Coherent | Violation:
    """Test the coherence bullets at threshold ``eps``.

    With ``r=None`` the checks are: light vertices, light neighbourhoods, no
    heavy anticomplete pair.  With a radius ``r`` the vertex checks are
    replaced by light radius-``r`` balls.  Anticomplete pairs are searched
    exactly for ``n <= exact_pair_limit`` and heuristically above it, in
    which case a ``Coherent`` verdict carries ``heuristic=True``.
    """
    eps = Fraction(eps)
    if eps <= 0:
        raise ValueError("eps must be positive")
    g = mg.graph
    if r is None:
        for v in g.vertices:
            if mg.mu([v]) >= eps:
                return heavy_vertex(mg, v, eps)
        for v in g.vertices:
            if mg.mu(g.adj[v]) >= eps:
                return heavy_neighbourhood(mg, v, eps)
    else:
        for v in g.vertices:
            if mg.mu(ball(g, v, r)) >= eps:
                return heavy_ball(mg, v, r, eps)
    if g.n <= exact_pair_limit:
        pair = _exact_pair(mg, eps)
        return anticomplete_pair(mg, *pair, eps) if pair else Coherent(False)
    pair = _heuristic_pair(mg, eps, seed, restarts)
    return anticomplete_pair(mg, *pair, eps) if pair else Coherent(True)


def _exact_pair(mg: MassedGraph, eps: Fraction):
    """Enumerate every ``A``; the best partner is ``V - N[A]``."""
    g, n = mg.graph, mg.graph.n
    num, den = mg.mass.num, mg.mass.den
    need = eps * den  # compare raw integer sums against this
    full = (1 << n) - 1
    nbmask = [sum(1 << u for u in g.adj[v]) | (1 << v) for v in range(n)]
    size = 1 << n
    raw = [0] * size
    closed = [0] * size
    for m in range(1, size):
        low = m & -m
        b = low.bit_length() - 1
        raw[m] = raw[m ^ low] + num[b]
        closed[m] = closed[m ^ low] | nbmask[b]
    for m in range(1, size):
        if raw[m] < need:
            continue
        rest = full & ~closed[m]
        if rest and raw[rest] >= need:
            return _bits(m), _bits(rest)
    return None


def _bits(m: int) -> set[int]:
    out, i = set(), 0
    while m:
        if m & 1:
            out.add(i)
        m >>= 1
        i += 1
    return out


def _heuristic_pair(mg: MassedGraph, eps: Fraction, seed: int, restarts: int):
    g = mg.graph
    V = set(g.vertices)

    def ok(A, B):
        return A and B and mg.mu(A) >= eps and mg.mu(B) >= eps

    # unions of components
    acc: set[int] = set()
    for comp in components(g, V):
        acc |= set(comp)
        if mg.mu(acc) >= eps:
            if ok(acc, V - acc):
                return acc, V - acc
            break
    # balls against the complement of the next ball
    for v in g.vertices:
        dist = bfs_distances(g, v)
        ecc = max(dist.values())
        for s in range(ecc + 1):
            A = {u for u, d in dist.items() if d <= s}
            B = V - {u for u, d in dist.items() if d <= s + 1}
            if ok(A, B):
                return A, B
            if mg.mu(B) < eps:
                break
    # greedy local search
    rng = random.Random(seed)
    order = sorted(V)
    for _ in range(restarts):
        A = {rng.choice(order)}
        while True:
            B = V - closed_neighbourhood(g, A)
            if ok(A, B):
                return A, B
            cands = sorted(B)
            if not cands:
                break
            best = max(cands, key=lambda c: (len(B - closed_neighbourhood(g, A | {c})), -c))
            A = A | {best}
    return None


# -- mass axioms --------------------------------------------------------------

@dataclass(frozen=True)
class MassReport:
    ok: bool
    clause: str = ""
    witness: tuple = ()

    def __bool__(self):
        return self.ok


def validate_mass(mg_or_mass, n: int | None = None, exhaustive_limit: int = 10,
                  samples: int = 2000, seed: int = 0) -> MassReport:
    """Check the mass axioms on a callable ``mu``.

    Exhaustive over all subset pairs when ``n <= exhaustive_limit``, random
    sampling above it.
    """
    if isinstance(mg_or_mass, MassedGraph):
        mu, n = mg_or_mass.mass, mg_or_mass.n
    else:
        mu = mg_or_mass
        if n is None:
            n = mu.n
    V = frozenset(range(n))
    if mu(frozenset()) != 0:
        return MassReport(False, "mu(empty) = 0", (frozenset(),))
    if mu(V) != 1:
        return MassReport(False, "mu(V) = 1", (V,))
    if n <= exhaustive_limit:
        subsets = [frozenset(c) for k in range(n + 1) for c in itertools.combinations(range(n), k)]
        val = {X: mu(X) for X in subsets}
        for X in subsets:
            if val[X] < 0:
                return MassReport(False, "mu nonnegative", (X,))
        for X in subsets:
            rest = V - X
            # supersets and disjoint partners of X
            for Y in subsets:
                if X <= Y and val[X] > val[Y]:
                    return MassReport(False, "monotone", (X, Y))
                if Y <= rest and val[X | Y] > val[X] + val[Y]:
                    return MassReport(False, "subadditive", (X, Y))
        return MassReport(True)
    rng = random.Random(seed)
    verts = sorted(V)
    for _ in range(samples):
        X = frozenset(v for v in verts if rng.random() < 0.5)
        Y = frozenset(v for v in verts if v not in X and rng.random() < 0.5)
        if mu(X) > mu(X | Y):
            return MassReport(False, "monotone", (X, X | Y))
        if mu(X | Y) > mu(X) + mu(Y):
            return MassReport(False, "subadditive", (X, Y))
    return MassReport(True)
