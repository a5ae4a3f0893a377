"""Clique-or-stable-set recursion driven by sparse splits and anticomplete pairs.

The recursion mirrors the induction for the polynomial clique-or-stable-set
bound: a large part of the graph that is sparse (or co-sparse) is split along
an anticomplete pair whenever one of linear size exists; stable sets of the
two sides are combined by disjoint union and the larger clique is kept.
The sparsifying step stands in for an external regularity-type theorem and is
a heuristic, so the quantitative claim is only recorded, never assumed.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .graph_core import (
    Graph, MassedGraph, _heuristic_pair, complement, induced_subgraph,
)
from .oracle import clique_and_stable_exact, max_anticomplete_pair_exact

__all__ = ["EHResult", "rodl_split_heuristic", "eh_recursion", "meets_bound"]


# -- sparse split ----------------------------------------------------------------

def _degree_ok(g: Graph, X: set[int], eps: Fraction, dense: bool) -> bool:
    lim = eps * len(X)
    for v in X:
        d = len(g.adj[v] & X)
        if dense:
            d = len(X) - 1 - d
        if d > lim:
            return False
    return True


def _peel(g: Graph, eps: Fraction, dense: bool, effort: int) -> set[int]:
    X = set(range(g.n))
    deg = {v: len(g.adj[v]) for v in X}

    def bad(v):
        d = deg[v] if not dense else len(X) - 1 - deg[v]
        return d

    while X and max(bad(v) for v in X) > eps * len(X):
        worst = max(X, key=lambda v: (bad(v), v))
        X.discard(worst)
        for u in g.adj[worst]:
            if u in X:
                deg[u] -= 1
    # local search: put vertices back while the condition survives
    for _ in range(effort):
        grew = False
        for v in range(g.n):
            if v not in X and _degree_ok(g, X | {v}, eps, dense):
                X.add(v)
                grew = True
        if not grew:
            break
    return X


def rodl_split_heuristic(G: Graph, eps, effort: int = 3):
    """Large ``X`` such that every vertex of ``G[X]`` (side ``direct``) or of
    its complement (side ``complement``) has degree at most ``eps |X|``.

    Greedy peeling of the worst vertex, then ``effort`` passes that add
    vertices back.  The result is checked by a direct degree scan.  Returns
    ``(X, side)``, or ``None`` when only singletons qualify.
    """
    eps = Fraction(eps)
    if eps < 0:
        raise ValueError("eps must be nonnegative")
    best = None
    for side, dense in (("direct", False), ("complement", True)):
        X = _peel(G, eps, dense, effort)
        if not _degree_ok(G, X, eps, dense):
            continue
        if best is None or len(X) > len(best[0]):
            best = (frozenset(X), side)
    if best is None or len(best[0]) <= 1:
        return None
    return best


# -- recursion ---------------------------------------------------------------------

@dataclass
class EHResult:
    clique: frozenset
    stable: frozenset
    c: Fraction
    trace: dict
    claim: bool = False

    @property
    def product(self) -> int:
        return len(self.clique) * len(self.stable)


def meets_bound(product: int, n: int, c) -> bool:
    """Exact test of ``product >= n^c`` for rational ``c``."""
    c = Fraction(c)
    if n <= 1:
        return product >= 1
    return product ** c.denominator >= n ** c.numerator


def _split_pair(g: Graph, eps: Fraction):
    """Anticomplete pair with both sides of at least ``eps n`` vertices."""
    n = g.n
    if n < 2:
        return None
    if n <= 15:
        pair = max_anticomplete_pair_exact(g)
        if pair and min(len(pair[0]), len(pair[1])) >= eps * n:
            return pair
        return None
    pair = _heuristic_pair(MassedGraph.uniform(g), max(eps, Fraction(1, n)), 0, 20)
    return (frozenset(pair[0]), frozenset(pair[1])) if pair else None


def _exact_base(g: Graph):
    res = clique_and_stable_exact(g)
    return res.clique, res.stable


def _greedy(g: Graph, dense: bool) -> frozenset:
    order = sorted(range(g.n), key=lambda v: (len(g.adj[v]) if not dense else -len(g.adj[v]), v))
    S: set[int] = set()
    for v in order:
        if dense:
            if all(u in g.adj[v] for u in S):
                S.add(v)
        elif not g.adj[v] & S:
            S.add(v)
    return frozenset(S)


def default_base(g: Graph):
    """Exact below 61 vertices, greedy above."""
    if g.n <= 60:
        return _exact_base(g)
    return _greedy(g, True), _greedy(g, False)


def eh_recursion(G: Graph, eps, c, coherent_base=None, splitter=None,
                 n0: int = 40, max_depth: int = 64) -> EHResult:
    """Clique and stable set of ``G`` by the split-or-base recursion.

    At each node: at most ``n0`` vertices are solved exactly; otherwise an
    anticomplete pair with both sides of at least ``eps n`` vertices splits
    the node (stable sets are united, the larger clique is kept); otherwise
    ``splitter`` (default :func:`rodl_split_heuristic`) restricts to a
    sparse or co-sparse part ``X`` and the node recurses once on ``G[X]``
    (in the complement for the co-sparse side, swapping clique and stable
    set); a node where neither applies goes to ``coherent_base(graph)``,
    which returns ``(clique, stable)``.  ``claim`` records whether
    ``|clique| |stable| >= |G|^c`` holds exactly.
    """
    eps, c = Fraction(eps), Fraction(c)
    if not 0 < c <= 1:
        raise ValueError("c must lie in (0, 1]")
    base = coherent_base or default_base
    split = splitter or (lambda g, e: rodl_split_heuristic(g, e))

    def solve(g: Graph, ids: list[int], depth: int, sparse_done: bool):
        node = {"n": g.n}
        if g.n == 0:
            node["kind"] = "empty"
            return frozenset(), frozenset(), node
        if g.n <= n0 or depth >= max_depth:
            cl, st = _exact_base(g) if g.n <= 60 else base(g)
            node.update(kind="base-exact" if g.n <= 60 else "base", clique=_out(cl, ids),
                        stable=_out(st, ids))
            return _out(cl, ids), _out(st, ids), node
        pair = _split_pair(g, eps)
        if pair is not None:
            A, B = pair
            sa, oa = induced_subgraph(g, A)
            sb, ob = induced_subgraph(g, B)
            ca, sta, na = solve(sa, [ids[v] for v in oa], depth + 1, False)
            cb, stb, nb = solve(sb, [ids[v] for v in ob], depth + 1, False)
            cl = ca if len(ca) >= len(cb) else cb
            st = sta | stb
            node.update(kind="split", A=_out(A, ids), B=_out(B, ids),
                        stable=st, clique=cl, children=[na, nb])
            return cl, st, node
        if not sparse_done:
            res = split(g, eps)
            if res is not None and (len(res[0]) < g.n or res[1] == "complement"):
                X, side = res
                sub, order = induced_subgraph(g, X)
                sub_ids = [ids[v] for v in order]
                if side == "complement":
                    st, cl, child = solve(complement(sub), sub_ids, depth + 1, True)
                else:
                    cl, st, child = solve(sub, sub_ids, depth + 1, True)
                node.update(kind="sparse", side=side, X=_out(X, ids), clique=cl, stable=st,
                            children=[child])
                return cl, st, node
        cl, st = base(g)
        node.update(kind="base-coherent", clique=_out(cl, ids), stable=_out(st, ids))
        return _out(cl, ids), _out(st, ids), node

    cl, st, trace = solve(G, list(range(G.n)), 0, False)
    _check_witnesses(G, cl, st)
    return EHResult(cl, st, c, trace, meets_bound(len(cl) * len(st), G.n, c))


def _out(S, ids) -> frozenset:
    return frozenset(ids[v] for v in S)


def _check_witnesses(G: Graph, clique, stable) -> None:
    for u in clique:
        for v in clique:
            if u < v and v not in G.adj[u]:
                raise AssertionError("clique witness has a non-edge")
    for u in stable:
        if G.adj[u] & stable:
            raise AssertionError("stable witness has an edge")


def exponent_bound(product: int, n: int) -> float:
    """Largest ``c`` with ``product >= n^c`` (for reporting)."""
    if n <= 1 or product <= 1:
        return 0.0
    return math.log(product) / math.log(n)
