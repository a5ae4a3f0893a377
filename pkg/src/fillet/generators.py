"""Seeded instance generators.

Every generator is deterministic in its parameters and ``seed`` and returns
an :class:`Instance`: the graph, its mass and a ``meta`` dict with the
planted structure and the exploratory settings the instance was built for.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction

from .graph_core import Graph, Mass, MassedGraph
from .pattern import RootedCaterpillar

__all__ = [
    "Instance", "FAMILIES", "generate_instance", "gnp", "cliques_union", "cycle",
    "path", "complete_bipartite", "gen_blobs", "gen_ladder", "gen_focussed",
    "gen_versatile", "caterpillar", "ladder_params",
]


@dataclass
class Instance:
    graph: Graph
    mass: Mass
    meta: dict = field(default_factory=dict)

    @property
    def massed(self) -> MassedGraph:
        return MassedGraph(self.graph, self.mass)


def _plain(g: Graph, **meta) -> Instance:
    return Instance(g, Mass.uniform(g.n), meta)


def gnp(n: int, p, seed: int = 0) -> Instance:
    p = Fraction(p)
    if not 0 <= p <= 1 or n < 0:
        raise ValueError("gnp needs n >= 0 and 0 <= p <= 1")
    rng = random.Random(seed)
    edges = [e for e in itertools.combinations(range(n), 2) if rng.random() < p]
    return _plain(Graph.from_edges(n, edges), family="gnp", n=n, p=str(p), seed=seed)


def cliques_union(k: int, size: int, seed: int = 0) -> Instance:
    if k < 1 or size < 1:
        raise ValueError("cliques-union needs k, size >= 1")
    edges = [(i * size + a, i * size + b) for i in range(k)
             for a, b in itertools.combinations(range(size), 2)]
    return _plain(Graph.from_edges(k * size, edges), family="cliques-union")


def cycle(n: int, seed: int = 0) -> Instance:
    if n < 3:
        raise ValueError("a cycle needs n >= 3")
    return _plain(Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)]), family="cycle")


def path(n: int, seed: int = 0) -> Instance:
    if n < 1:
        raise ValueError("a path needs n >= 1")
    return _plain(Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)]), family="path")


def complete_bipartite(a: int, b: int, seed: int = 0) -> Instance:
    if a < 1 or b < 1:
        raise ValueError("complete-bipartite needs a, b >= 1")
    edges = [(i, a + j) for i in range(a) for j in range(b)]
    return _plain(Graph.from_edges(a + b, edges), family="complete-bipartite")


def caterpillar(spine_len: int, legs) -> RootedCaterpillar:
    """Caterpillar with spine ``0..spine_len-1`` and ``legs[i]`` leaves on
    spine vertex ``i``; the head is the first spine vertex of degree > 1."""
    legs = list(legs)
    if len(legs) != spine_len:
        raise ValueError("one leg count per spine vertex")
    edges = [(i, i + 1) for i in range(spine_len - 1)]
    n = spine_len
    for i, m in enumerate(legs):
        for _ in range(m):
            edges.append((i, n))
            n += 1
    g = Graph.from_edges(n, edges)
    head = next((i for i in range(spine_len) if g.degree(i) > 1), 0)
    return RootedCaterpillar(g, tuple(range(spine_len)), head)


def gen_blobs(t: int, size: int, seed: int = 0) -> Instance:
    """``2^t`` clique blobs of ``size`` vertices in a row, consecutive
    blobs complete to each other, no other edges.  ``meta["family"]``
    lists the blobs; ``delta = eps = mu(blob) / 2^(2^t + 2)`` meets the
    realization precondition ``mu(Y) >= 2^(2^t) (delta + eps)``."""
    if t < 1 or size < 1:
        raise ValueError("gen-blobs needs t, size >= 1")
    p = 2 ** t
    blobs = [list(range(i * size, (i + 1) * size)) for i in range(p)]
    edges = [(x, y) for blob in blobs for x, y in itertools.combinations(blob, 2)]
    edges += [(x, y) for i in range(p - 1) for x in blobs[i] for y in blobs[i + 1]]
    g = Graph.from_edges(p * size, edges)
    eps = Fraction(1, p * 2 ** (p + 2))
    return Instance(g, Mass.uniform(g.n),
                    {"family": blobs, "t": t, "size": size, "delta": eps, "eps": eps})


def gen_ladder(k: int, a: int, b: int, c: int, cross: str = "matching",
               seed: int = 0) -> Instance:
    """``k`` columns ``A_i, B_i, C_i`` with ``B_i`` spread over all of ``C``.

    ``A_i`` is a path on ``a`` vertices whose last vertex is complete to
    ``B_i`` (``b`` vertices).  ``C`` is the union of the blocks ``C_i`` of
    ``c`` vertices, numbered ``0..kc-1``; vertex ``s`` of ``B_i`` is
    adjacent to the ``C`` vertices with number ``s`` mod ``b``, so every
    ``B_i`` covers all of ``C`` and no ``B`` vertex sees more than a
    ``1/b`` share of it.  Cross edges between ``C`` blocks:
    ``"matching"`` joins the ``s``-th vertices of every two blocks,
    ``"dense"`` adds each cross pair with probability 1/2, ``"none"``
    nothing.  The mass is uniform on ``C``.

    ``meta`` has the planted ladder (not half-cleaned, since ``B_i`` sees
    every ``C_j``) and the documented thresholds ``eps = 1/(b-1)``,
    ``kappa = 1/(4k^2)``.  With ``b >= max(8k(k-1), 16)`` and ``kc`` a
    multiple of ``b`` these meet the ladder hypotheses, every vertex and
    ``B`` neighbourhood is lighter than ``eps``, and so is every ``C``
    neighbourhood when ``kc/b >= k``.
    """
    if k < 1 or a < 1 or b < 1 or c < 1:
        raise ValueError("gen-ladder needs k, a, b, c >= 1")
    if cross not in ("matching", "dense", "none"):
        raise ValueError("cross is matching, dense or none")
    rng = random.Random(seed)
    w = a + b + c
    A = [list(range(i * w, i * w + a)) for i in range(k)]
    B = [list(range(i * w + a, i * w + a + b)) for i in range(k)]
    C = [list(range(i * w + a + b, (i + 1) * w)) for i in range(k)]
    allC = [v for blk in C for v in blk]
    edges = []
    for i in range(k):
        edges += list(zip(A[i], A[i][1:]))
        edges += [(A[i][-1], y) for y in B[i]]
        edges += [(B[i][s % b], y) for s, y in enumerate(allC)]
    for i, j in itertools.combinations(range(k), 2):
        if cross == "matching":
            edges += list(zip(C[i], C[j]))
        elif cross == "dense":
            edges += [(x, y) for x in C[i] for y in C[j] if rng.random() < 0.5]
    g = Graph.from_edges(k * w, edges)
    cset = set(allC)
    mass = Mass([1 if v in cset else 0 for v in range(g.n)], len(cset))
    meta = {"A": A, "B": B, "C": C, "k": k, "cross": cross, "half_cleaned": False,
            "eps": Fraction(1, b - 1) if b > 1 else Fraction(1),
            "kappa": Fraction(1, 4 * k * k)}
    return Instance(g, mass, meta)


def ladder_params(k: int, a: int = 1, cross: str = "matching") -> dict:
    """Parameters for :func:`gen_ladder` meeting the documented bounds."""
    b = max(8 * k * (k - 1), 16)
    return {"k": k, "a": a, "b": b, "c": b, "cross": cross}


def gen_focussed(leaves: int, spine: int | None = None, s: int = 1, seed: int = 0) -> Instance:
    """Port-block graph on which the focussed route succeeds.

    There are ``m = |T| + 2`` cliques of ``(m - 1) * s`` vertices; clique
    ``i`` holds one port of ``s`` vertices for every other clique ``j``, and
    that port is complete to all of clique ``j``.  Every heavy set then has
    a heavy radius-1 ball.  ``meta`` records the caterpillar ``T`` (a star,
    or a spine of ``spine`` vertices with the leaves spread along it) and
    the exploratory settings the instance is documented for.
    """
    T = _spread_caterpillar(leaves, spine)
    m = len(T) + 2
    width = (m - 1) * s
    edges = set()
    for i in range(m):
        blk = range(i * width, (i + 1) * width)
        edges |= {(x, y) for x, y in itertools.combinations(blk, 2)}
        for j in range(m):
            if j == i:
                continue
            slot = j if j < i else j - 1
            for x in range(i * width + slot * s, i * width + (slot + 1) * s):
                for y in range(j * width, (j + 1) * width):
                    edges.add((min(x, y), max(x, y)))
    g = Graph.from_edges(m * width, sorted(edges))
    meta = {"T": T, "eps": Fraction(1, 2 ** 60),
            "overrides": {"focus_k": m, "kappa0": Fraction(1, 2 ** 200)}}
    return Instance(g, Mass.uniform(g.n), meta)


def _spread_caterpillar(leaves: int, spine: int | None) -> RootedCaterpillar:
    if leaves < 2:
        raise ValueError("need at least two leaves")
    if spine is None or spine <= 1:
        return caterpillar(1, [leaves])
    if leaves < 2:
        raise ValueError("a spine needs two end leaves")
    # end spine vertices carry at least one leaf, the rest are spread evenly
    legs = [0] * spine
    for i in range(leaves):
        legs[[0, spine - 1][i % 2] if i < 2 else (i - 2) % spine] += 1
    return caterpillar(spine, legs)


def gen_versatile(leaves: int | None = None, spine: int | None = None, T=None,
                  pattern: str | None = None, pad: int = 3, width: int = 3,
                  seed: int = 0) -> Instance:
    """Instance on which the ladder route returns a versatile certificate.

    Every leaf of ``T`` gets a region (a clique of ``pad`` vertices on the
    end of a long induced arm) and every spine vertex a hub clique of
    ``width`` vertices; consecutive hubs are complete and each arm starts
    at the hub of its parent.  Each region is paired with a column (a rail
    plus the rungs tying it to the region) that carries mass ``eps``, so the
    column descent can keep whole rails.  Arms carry almost no mass and the
    link vertices (one per pair of leaves, joining their pad rungs) carry
    none, so the nursery descent only sees pads and hubs.

    Leaf regions come first, listed in the order the ancestor chain of
    ``T`` adds them; the nursery then always merges the next leaf into
    the growing component.  ``meta`` holds ``T``, ``eps``, ``kappa``, ``k``
    and the exploratory ``overrides`` the instance is built for.

    ``T`` is given directly, as the caterpillar of a named ``pattern``
    (``"C4"``, ``"K4"``, ...), or as ``leaves`` spread along ``spine``.
    Pads and hubs are heavier than ``eps``, so the focussed route rejects
    the instance; it is meant for the ladder route.
    """
    from .pattern import ancestors, derive_caterpillar, hamiltonize, named_pattern
    if pattern is not None:
        T = derive_caterpillar(hamiltonize(named_pattern(pattern))).T
    if T is None:
        T = _spread_caterpillar(leaves if leaves is not None else 2, spine)
    inner = list(T.internal) if len(T) > 1 else [T.head]
    seen: list[int] = []
    for S, _h in ancestors(T):
        seen += [v for v in sorted(S) if v not in seen]
    lv = [v for v in seen if v in T.leaves and v not in inner]
    q, L = len(inner), len(lv)
    k = q + L
    alen = 4 * k + 2 * q + 8
    ids = itertools.count()
    rails = [[next(ids) for _ in range(alen)] for _ in range(L)] + [[next(ids)] for _ in range(q)]
    arm_rungs = [[next(ids) for _ in range(alen)] for _ in range(L)]
    pad_rung = [next(ids) for _ in range(L)]
    hub_rungs = [[next(ids) for _ in range(width)] for _ in range(q)]
    pads, links, arms = [], [], []
    for j in range(L):
        pads.append([next(ids) for _ in range(pad)])
        links.append({i: next(ids) for i in range(L) if i != j})
        # reversed so the least id sits at the far end of the arm
        arms.append(list(reversed([next(ids) for _ in range(alen)])))
    hubs = [[next(ids) for _ in range(width)] for _ in range(q)]
    n = next(ids)
    pos = {v: i for i, v in enumerate(inner)}
    E = []
    for j, leaf in enumerate(lv):
        (par,) = T.tree.adj[leaf]
        r = rails[j]
        E += list(zip(r, r[1:]))
        for p in range(alen):
            E += [(r[p], arm_rungs[j][p]), (arm_rungs[j][p], arms[j][p])]
        E += list(zip(arms[j], arms[j][1:]))
        E.append((r[-1], pad_rung[j]))
        E += [(pad_rung[j], x) for x in pads[j] + list(links[j].values())]
        E += list(itertools.combinations(pads[j], 2))
        E += [(arms[j][-1], x) for x in pads[j]]
        E += [(pads[j][0], x) for x in links[j].values()]
        E += [(arms[j][0], h) for h in hubs[pos[par]]]
    for i, j in itertools.combinations(range(L), 2):
        E.append((links[i][j], links[j][i]))
    for s in range(q):
        E += list(itertools.combinations(hubs[s], 2))
        E += [(rails[L + s][0], b) for b in hub_rungs[s]]
        E += list(zip(hub_rungs[s], hubs[s]))
        if s + 1 < q:
            E += [(x, y) for x in hubs[s] for y in hubs[s + 1]]
    g = Graph.from_edges(n, [(min(x, y), max(x, y)) for x, y in E])
    eps, kappa = Fraction(1, 10 * k), Fraction(9, 10 * k)
    tiny = kappa / (100 * alen)
    w = [Fraction(0)] * n
    for j in range(L):
        rungs = arm_rungs[j] + [pad_rung[j]]
        for b in rungs:
            w[b] = eps / len(rungs)
        for c in arms[j]:
            w[c] = tiny
        for x in pads[j]:
            w[x] = (kappa - tiny * alen) / pad
    for s in range(q):
        for b in hub_rungs[s]:
            w[b] = eps / width
        for h in hubs[s]:
            w[h] = kappa / width
    small = Fraction(1, 2 ** 40)
    meta = {"T": T, "eps": eps, "kappa": kappa, "k": k,
            "overrides": {"k": k, "kappa": kappa, "real_delta": small, "real_eps": small}}
    return Instance(g, Mass.weighted(w), meta)


FAMILIES = {
    "gnp": gnp,
    "cliques-union": cliques_union,
    "cycle": cycle,
    "path": path,
    "complete-bipartite": complete_bipartite,
    "gen-blobs": gen_blobs,
    "gen-ladder": gen_ladder,
    "gen-focussed": gen_focussed,
    "gen-versatile": gen_versatile,
}


def generate_instance(family: str, params: dict, seed: int = 0) -> Instance:
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    return FAMILIES[family](**params, seed=seed)
