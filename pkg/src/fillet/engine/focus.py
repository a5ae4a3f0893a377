"""Versatile copies in graphs where heavy sets have heavy small balls."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..graph_core import MassedGraph, bfs_distances, shortest_path
from ._common import (
    StepFailure, VersatileCertificate, blame_pair, blame_vertices, headed,
    is_induced_copy, leaf_parent, spine_walk, touch, trivial_copy,
)
from .ladder import _Cover
from .realization import catch_violation, focus_ball, realize

__all__ = ["FocusSupport", "mass_blocks", "versatile_via_focus"]


@dataclass(frozen=True)
class FocusSupport:
    """Leaf sets ``X[c]`` (keyed by leaf image ``c``), each containing its
    spine vertex ``centre[c]``, which is an ``radius``-centre of it and whose
    only neighbour in it is ``c``."""

    X: dict
    centre: dict
    spine: tuple
    radius: int
    t: int
    eps: Fraction


def mass_blocks(mg: MassedGraph, count: int, lam) -> list[set[int]]:
    """Disjoint id-order runs of vertices, each of mass at least ``lam``."""
    lam = Fraction(lam)
    blocks, cur, raw = [], set(), 0
    need = lam * mg.mass.den
    for v in range(mg.n):
        if len(blocks) == count:
            break
        cur.add(v)
        raw += mg.mass.num[v]
        if raw >= need:
            blocks.append(cur)
            cur, raw = set(), 0
    if len(blocks) < count:
        raise StepFailure("focus-route", "not enough mass for the blocks",
                          {"blocks": len(blocks), "wanted": count})
    return blocks


def shrink(mg: MassedGraph, X, centre: int, kappa, keep=()) -> set[int]:
    """Delete vertices of ``X`` farthest from ``centre`` (largest id first
    among ties) while ``X`` stays ``kappa``-dominant; ``centre``, ``keep``
    and the last neighbour of ``centre`` are never deleted.  Deleting a farthest vertex never lengthens the
    remaining distances, so ``centre`` keeps its radius."""
    g = mg.graph
    X = set(X)
    dist = bfs_distances(g, centre, within=X)
    cov = _Cover(mg, X, _All(), closed=True)
    protect = {centre, *keep}
    inner = set(g.adj[centre]) & X
    for v in sorted(dist, key=lambda w: (-dist[w], -w)):
        if v in protect or inner == {v}:
            continue
        inner.discard(v)
        cov.remove(v)
        if cov.mass < kappa:
            cov.add(v)
            if v in g.adj[centre]:
                inner.add(v)
            break
        X.discard(v)
    return X


class _All:
    def __contains__(self, v):
        return True


def focus_route(mg: MassedGraph, T, c, oracle=None) -> VersatileCertificate:
    if len(T) == 1:
        return trivial_copy(mg, T)
    g = mg.graph
    oracle = oracle or focus_ball
    T = headed(T)
    t = len(T)
    try:
        Y = mass_blocks(mg, c.blocks, c.lam)
    except StepFailure:
        # vertices heavier than eps (exploratory runs only): a block may
        # overshoot by a whole vertex
        heaviest = Fraction(max(mg.mass.num, default=0), mg.mass.den)
        try:
            Y = mass_blocks(mg, c.blocks, Fraction(1, c.blocks) - heaviest)
        except StepFailure:
            blame_vertices(mg, c.eps, range(g.n))
            raise
    R = realize(mg, T, Y, c.focus_kappa0, c.focus_real_eps, centred=c.rho,
                oracle=oracle, check_pre=False)
    spine = T.internal
    xs = spine_walk(g, T, R.X)
    at = dict(zip(spine, xs))
    leaves = sorted(T.leaves)
    xv = {v: at[leaf_parent(T, v)] for v in leaves}
    X = {v: set(R.X[v]) | {xv[v]} for v in leaves}
    leaf = {}
    S_spine = set(xs)
    for i, v in enumerate(leaves, start=1):
        kappa = c.focus_kappa(i)
        for u in leaves:
            if u != v:
                X[u] = shrink(mg, X[u], xv[u], kappa, [leaf[u]] if u in leaf else ())
        block = touch(g, S_spine.union(*(X[u] for u in leaves if u != v)))
        Yp = touch(g, X[v]) - block
        if not Yp:
            raise StepFailure("focus-route", "nothing left near a leaf set",
                              {"leaf": v, "round": i})
        y, ballY = oracle(mg, Yp, c.rho)
        P = shortest_path(g, xv[v], y, X[v] | {y})
        if P is None:
            raise StepFailure("focus-route", "leaf set does not reach the heavy ball",
                              {"leaf": v})
        X[v] = set(ballY) | set(P)
        leaf[v] = P[1]
    copy = dict(at)
    copy.update(leaf)
    if not is_induced_copy(g, T.tree, copy):
        raise StepFailure("focus-route", "spine and leaves do not induce T", {})
    sets = {leaf[v]: frozenset(X[v]) for v in leaves}
    centre = {leaf[v]: xv[v] for v in leaves}
    support = FocusSupport(sets, centre, tuple(xs), 3 * c.rho + 2, t, Fraction(c.eps))
    return VersatileCertificate(T, copy, "focus", support, mg)


@catch_violation
def versatile_via_focus(mg: MassedGraph, T, consts, oracle=None):
    """Versatile copy of ``T`` from centred realizations, or a violation.

    Raises :class:`FocusBreak` when a requested heavy ball does not exist;
    the dispatcher treats that as the signal to switch to the ladder route.
    """
    return focus_route(mg, T, consts, oracle)


def join_kappa(S: FocusSupport, i: int) -> Fraction:
    return (S.radius + 2) * Fraction(S.t) ** (S.t - i + 1) * S.eps


def focus_paths(cert: VersatileCertificate, pairing) -> dict:
    """Join the pairs one at a time, shrinking the later leaf sets first."""
    S: FocusSupport = cert.support
    mg = cert.host
    g = mg.graph
    pairs = [tuple(sorted(b)) for b in pairing if len(b) == 2]
    singles = [next(iter(b)) for b in pairing if len(b) == 1]
    order = [x for p in pairs for x in p] + singles
    X = {c: set(S.X[c]) for c in order}
    spine = set(S.spine)
    used: set[int] = set()
    out = {frozenset([c]): (c,) for c in singles}
    for i, (u, v) in enumerate(pairs, start=1):
        later = order[2 * i:]
        for w in later:
            X[w] = shrink(mg, X[w], S.centre[w], join_kappa(S, i), [w])
        block = touch(g, spine | used | set().union(*(X[w] for w in later)))
        Au = touch(g, X[u]) - block
        Av = touch(g, X[v]) - block
        a = b = None
        for cand in sorted(Au):
            if cand in Av:
                a = b = cand
                break
            hit = g.adj[cand] & Av
            if hit:
                a, b = cand, min(hit)
                break
        if a is None:
            blame_pair(mg, S.eps, Au, Av)
            raise StepFailure("join-leaves", "no edge between the two leaf regions",
                              {"pair": [u, v]})
        within = (X[u] | X[v] | {a, b}) - spine
        P = shortest_path(g, u, v, within)
        if P is None:
            raise StepFailure("join-leaves", "leaves not joined through their sets",
                              {"pair": [u, v]})
        out[frozenset((u, v))] = tuple(P)
        used |= set(P)
    return out
