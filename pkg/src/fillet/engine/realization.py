"""Connected heavy subsets and caterpillar realizations by nursery descent."""
from __future__ import annotations

import functools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from ..graph_core import Graph, MassedGraph, Violation, bfs_distances, components
from ..pattern import RootedCaterpillar, ancestors
from ._common import (
    FocusBreak, StepFailure, ViolationFound, blame_neighbourhoods, blame_pair,
    m_sequence,
)

__all__ = [
    "Realization", "find_connected_heavy", "find_realization",
    "focus_ball", "catch_violation",
]


def catch_violation(fn):
    """Turn an internal ``ViolationFound`` into a returned ``Violation``."""

    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except ViolationFound as exc:
            return exc.violation

    return wrapper


# -- connected heavy subsets ---------------------------------------------------

def connected_heavy(mg: MassedGraph, Y, eps) -> list[int]:
    """Component of ``G[Y]`` of mass more than ``mu(Y) - eps``.

    Follows the component argument: take the shortest run of components
    (ordered by least vertex) reaching ``eps``; the rest must be light, and
    the last component of the run must carry everything but ``eps``.
    Raises ``ViolationFound`` when one of the two anticomplete splits is
    heavy on both sides.
    """
    eps = Fraction(eps)
    Y = set(Y)
    comps = components(mg.graph, Y)
    total = mg.mu(Y)
    for C in comps:
        if mg.mu(C) > total - eps:
            return C
    acc: set[int] = set()
    for idx, C in enumerate(comps):
        acc |= set(C)
        if mg.mu(acc) >= eps:
            blame_pair(mg, eps, acc, Y - acc)
            blame_pair(mg, eps, C, Y - set(C))
            break
    raise StepFailure("connected-heavy", "no component carries all but epsilon",
                      {"mass": str(total), "components": len(comps)})


@catch_violation
def find_connected_heavy(mg: MassedGraph, Y, eps):
    """Connected ``X`` inside ``Y`` with ``mu(X) > mu(Y) - eps``, or a
    violation of coherence at ``eps``.

    >>> from fillet.graph_core import Graph, MassedGraph
    >>> g = Graph.from_edges(4, [(0, 1), (1, 2), (0, 2)])
    >>> sorted(find_connected_heavy(MassedGraph.uniform(g), range(4), Fraction(3, 10)))
    [0, 1, 2]
    """
    eps = Fraction(eps)
    if eps <= 0:
        raise ValueError("epsilon must be positive")
    if mg.mu(Y) < 3 * eps:
        raise ValueError("need mu(Y) >= 3 eps")
    return set(connected_heavy(mg, Y, eps))


# -- focus oracle -------------------------------------------------------------

def focus_ball(mg: MassedGraph, Z, radius: int):
    """First centre ``v`` (by id) whose ``radius``-ball inside ``G[Z]``
    carries half the mass of ``Z``; returns ``(v, distances)`` or raises
    ``FocusBreak``."""
    Z = set(Z)
    half = mg.mu(Z) / 2
    for v in sorted(Z):
        dist = bfs_distances(mg.graph, v, within=Z, limit=radius)
        if mg.mu(dist) >= half:
            return v, dist
    raise FocusBreak(Z, radius)


# -- realizations ----------------------------------------------------------------

@dataclass
class Realization:
    """A realization of the rooted caterpillar ``T``.

    ``X[v]`` is the set assigned to tree vertex ``v`` and ``spread[v]`` the
    index of the family member containing it.  In centred mode
    ``centres[v]`` is an ``radius``-centre of ``X[v]`` for every non-head
    vertex.
    """

    T: RootedCaterpillar
    X: dict
    spread: dict
    delta: Fraction
    centres: dict = field(default_factory=dict)
    radius: int | None = None
    trace: list = field(default_factory=list)


class _Comp:
    __slots__ = ("size", "emb")

    def __init__(self, size, emb):
        self.size = size      # the component is a copy of ancestor T_size
        self.emb = emb        # tree vertex -> nursery vertex (family index)


def _sorted_comps(comps, anc):
    head_of = lambda c: c.emb[anc[c.size - 1][1]]
    return sorted(comps, key=lambda c: (c.size, head_of(c)))


@catch_violation
def find_realization(mg: MassedGraph, T: RootedCaterpillar, family, delta, eps,
                     centred: int | None = None,
                     oracle: Callable | None = None,
                     strict: bool = True) -> Realization | Violation:
    """Spread ``delta``-realization of ``T`` over ``family`` (or a violation).

    With ``centred=r`` every non-head set gets an ``r``-centre; heavy
    ``r``-centred subsets are requested from ``oracle`` (default
    :func:`focus_ball`), which may raise :class:`FocusBreak`.  ``strict=False``
    allows a family of any size; the descent may then stall with a
    ``StepFailure``.
    """
    return realize(mg, T, family, delta, eps, centred, oracle, check_pre=strict)


def realize(mg, T, family, delta, eps, centred=None, oracle=None, *, check_pre=True):
    g = mg.graph
    delta, eps = Fraction(delta), Fraction(eps)
    family = [frozenset(Y) for Y in family]
    t = len(T)
    p = len(family)
    seen: set[int] = set()
    for Y in family:
        if Y & seen:
            raise ValueError("family members must be disjoint")
        seen |= Y
    if check_pre:
        if p != 2 ** t:
            raise ValueError(f"family must have 2^|T| = {2 ** t} members")
        if centred is not None and eps > delta / 2:
            raise ValueError("centred mode needs eps <= delta / 2")
    if p == 0:
        raise ValueError("empty family")
    anc = ancestors(T)
    m = m_sequence(delta, eps, p)
    if t == 1:
        for idx, Y in enumerate(family):
            if mg.mu(Y) >= delta:
                return Realization(T, {T.head: Y}, {T.head: idx}, delta)
        raise StepFailure("realization", "no family member of mass delta", {})
    if oracle is None:
        oracle = focus_ball

    X = {idx: set(Y) for idx, Y in enumerate(family)}
    centres: dict[int, int] = {}
    first = anc[0][1]
    comps = [_Comp(1, {first: idx}) for idx in range(p)]
    trace = []

    while True:
        k = len(comps)
        if k < 2:
            raise StepFailure("realization", "nursery collapsed before reaching T",
                              {"size": comps[0].size if comps else 0})
        comps = _sorted_comps(comps, anc)
        heads = [c.emb[anc[c.size - 1][1]] for c in comps]
        I = [i for i, c in enumerate(comps) if anc[c.size][1] != anc[c.size - 1][1]]
        i = max(I) if I else 0
        hi = heads[i]

        # Z and its growth order z_1, z_2, ...
        if centred is None:
            Z = connected_heavy(mg, X[hi], eps)
            order = list(bfs_distances(g, min(Z), within=set(Z)))
            centre = None
        else:
            centre, dist = oracle(mg, X[hi], centred)
            order = sorted(dist, key=lambda v: (dist[v], v))

        # minimal prefix dominating some other head set to level m_{k-1}
        owner = {}
        for j, h in enumerate(heads):
            if j != i:
                for v in X[h]:
                    owner[v] = j
        got = [Fraction(0)] * k
        counted: set[int] = set()
        target = m[k - 1]
        q = None
        for pos, z in enumerate(order):
            for u in g.adj[z]:
                j = owner.get(u)
                if j is not None and u not in counted:
                    counted.add(u)
                    got[j] += mg.mu([u])
            hits = [j for j in range(k) if j != i and got[j] >= target]
            if hits:
                q = pos + 1
                break
        if q is None:
            Zs = set(order)
            for j, h in enumerate(heads):
                if j != i:
                    blame_pair(mg, eps, Zs, X[h] - _nbrs(g, Zs))
            raise StepFailure("realization", "no head set is dominated by Z",
                              {"k": k, "target": str(target)})

        def gain(j):
            a, b = comps[i].size, comps[j].size
            return (2 ** b - 2 ** a) if j > i else (2 ** a - 2 ** b)

        j = max(hits, key=lambda j: (gain(j), -j))
        hj = heads[j]
        prefix = set(order[:q])
        N = _nbrs(g, prefix)

        ci, cj = comps[i], comps[j]
        if j < i:
            s = ci.size
            new_vertex = next(iter(anc[s][0] - anc[s - 1][0]))
            ci.emb[new_vertex] = hj
            ci.size += 1
            for tv, nv in cj.emb.items():
                if nv != hj:
                    X.pop(nv, None)
            comps.remove(cj)
            merged = ci
        else:
            s = cj.size
            new_vertex = next(iter(anc[s][0] - anc[s - 1][0]))
            cj.emb[new_vertex] = hi
            cj.size += 1
            for tv, nv in ci.emb.items():
                if nv != hi:
                    X.pop(nv, None)
            comps.remove(ci)
            merged = cj

        X[hi] = prefix
        X[hj] = X[hj] & N
        if centred is not None:
            centres[hi] = centre
        trace.append({"k": k, "i": i, "j": j, "q": q,
                      "phi": sum(2 ** c.size for c in comps)})

        if merged.size == t:
            emb = merged.emb
            head = T.head
            out = {tv: frozenset(X[nv]) for tv, nv in emb.items()}
            spread = dict(emb)
            cen = {tv: centres[nv] for tv, nv in emb.items() if nv in centres and tv != head}
            return Realization(T, out, spread, delta, cen,
                               centred, trace)

        # the remaining heads lose the neighbours of the prefix
        target = m[k - 1]
        for c in comps:
            h = c.emb[anc[c.size - 1][1]]
            if h in (hi, hj):
                continue
            X[h] = X[h] - N
            if mg.mu(X[h]) < target:
                blame_neighbourhoods(mg, eps, [order[q - 1]])
                raise StepFailure("realization", "a head set fell below m_{k-1}",
                                  {"k": k, "target": str(target)})


def _nbrs(g: Graph, S) -> set[int]:
    out: set[int] = set()
    for s in S:
        out |= g.adj[s]
    return out
