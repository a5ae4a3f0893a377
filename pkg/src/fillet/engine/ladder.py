"""Columns, ladders and linking ports through a ladder."""
from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass
from fractions import Fraction

from ..graph_core import MassedGraph, ball, bfs_distances, components, shortest_path
from ._common import (
    StepFailure, VersatileCertificate, blame_ball, blame_local, blame_pair,
    headed, is_induced_copy, leaf_parent, neighbours_in, spine_walk, trivial_copy,
)
from .realization import catch_violation, connected_heavy, realize

__all__ = [
    "Columns", "Ladder", "LadderSupport", "build_columns", "build_ladder",
    "link_pairing", "versatile_via_ladder",
]


@dataclass(frozen=True)
class Columns:
    A: tuple[frozenset[int], ...]
    B: tuple[frozenset[int], ...]
    C: frozenset[int]

    @property
    def k(self) -> int:
        return len(self.A)


@dataclass(frozen=True)
class Ladder:
    """Blocks ``A_i``, ``B_i``, ``C_i`` of a ``k``-ladder."""

    A: tuple[frozenset[int], ...]
    B: tuple[frozenset[int], ...]
    C: tuple[frozenset[int], ...]
    half_cleaned: bool = True

    @property
    def k(self) -> int:
        return len(self.A)

    def union(self):
        u = lambda blocks: frozenset().union(*blocks) if blocks else frozenset()
        return u(self.A), u(self.B), u(self.C)


# -- helpers -------------------------------------------------------------------

class _Cover:
    """Cover counts of a set ``S`` over a fixed host set, with exact mass of
    the covered part maintained incrementally."""

    def __init__(self, mg, S, host, closed=False):
        self.mg = mg
        self.host = host
        self.closed = closed
        self.cnt: dict[int, int] = {}
        self.raw = 0
        for s in S:
            self.add(s)

    def _targets(self, s):
        adj = self.mg.graph.adj[s]
        tg = [u for u in adj if u in self.host]
        if self.closed and s in self.host:
            tg.append(s)
        return tg

    def add(self, s):
        num = self.mg.mass.num
        for u in self._targets(s):
            c = self.cnt.get(u, 0)
            if c == 0:
                self.raw += num[u]
            self.cnt[u] = c + 1

    def remove(self, s):
        num = self.mg.mass.num
        for u in self._targets(s):
            c = self.cnt[u] - 1
            if c == 0:
                del self.cnt[u]
                self.raw -= num[u]
            else:
                self.cnt[u] = c

    @property
    def mass(self) -> Fraction:
        return Fraction(self.raw, self.mg.mass.den)

    def covered(self) -> set[int]:
        return set(self.cnt)


def _minimal_cover(mg, Bset, host, thr, grow=False):
    """Inclusion-minimal subset of ``Bset`` whose covered part of ``host``
    has mass at least ``thr`` (greedy in id order).  Returns ``None`` if
    even the whole of ``Bset`` falls short."""
    order = sorted(Bset)
    if grow:
        cov = _Cover(mg, [], host)
        chosen = []
        for b in order:
            if cov.mass >= thr:
                break
            cov.add(b)
            chosen.append(b)
    else:
        cov = _Cover(mg, order, host)
        chosen = list(order)
    if cov.mass < thr:
        return None
    keep = set(chosen)
    for b in sorted(chosen, reverse=True):
        cov.remove(b)
        if cov.mass >= thr:
            keep.discard(b)
        else:
            cov.add(b)
    return keep


def _connected_without(g, X: set[int], v: int) -> bool:
    """Whether ``X - {v}`` is still connected (``X`` connected).  It is
    exactly when the neighbours of ``v`` in it stay in one component, so the
    search stops once they are all reached."""
    nb = g.adj[v] & X
    if len(X) <= 1:
        return False
    if len(nb) <= 1:
        return True
    start = min(nb)
    todo = set(nb) - {start}
    seen = {start, v}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for y in g.adj[x]:
            if y in X and y not in seen:
                seen.add(y)
                todo.discard(y)
                if not todo:
                    return True
                queue.append(y)
    return False


def _minimal_connected(mg, D: set[int], Cp: set[int], eps) -> set[int] | None:
    """Minimal connected ``X`` inside ``D`` whose closed neighbourhood within
    ``Cp`` has mass at least ``eps``.

    Grows a connected set from the least vertex of the first suitable
    component, always adding the least vertex adjacent to it, until it is
    heavy enough; then deletes vertices in decreasing id order while the
    set stays connected and heavy enough.
    """
    g = mg.graph
    comps = []
    if mg.mu(D) >= 3 * eps:
        comps.append(connected_heavy(mg, D, eps))
    comps.extend(components(g, D))
    for K in comps:
        Kset = set(K)
        start = min(Kset)
        Xs = {start}
        cov = _Cover(mg, Xs, Cp, closed=True)
        front = [u for u in g.adj[start] if u in Kset]
        heapq.heapify(front)
        while cov.mass < eps and front:
            v = heapq.heappop(front)
            if v in Xs:
                continue
            Xs.add(v)
            cov.add(v)
            for u in g.adj[v]:
                if u in Kset and u not in Xs:
                    heapq.heappush(front, u)
        if cov.mass < eps:
            continue
        changed = True
        while changed:
            changed = False
            for v in sorted(Xs, reverse=True):
                if len(Xs) == 1:
                    break
                cov.remove(v)
                if cov.mass >= eps and _connected_without(g, Xs, v):
                    Xs.discard(v)
                    changed = True
                else:
                    cov.add(v)
        return Xs
    return None


# -- columns -------------------------------------------------------------------

def columns(mg: MassedGraph, k: int, kappa, eps, strict=True) -> Columns:
    g = mg.graph
    kappa, eps = Fraction(kappa), Fraction(eps)
    V = set(range(g.n))
    A: list[set[int]] = []
    B: list[set[int]] = []
    Cp = set(V)
    for step in range(k):
        thr = kappa - 3 * step * eps
        Cs = []
        for i in range(step):
            small = _minimal_cover(mg, B[i], Cp, thr)
            if small is not None:
                B[i] = small
            Cs.append(neighbours_in(g, B[i], Cp))
        D = Cp.difference(*Cs) if Cs else set(Cp)
        X = _minimal_connected(mg, D, Cp, eps) if D else None
        if X is None:
            blame_local(mg, eps, set().union(*A, *B) if A else ())
            raise StepFailure("columns", "no connected set with a heavy neighbourhood",
                              {"column": step + 1, "mass_D": str(mg.mu(D))})
        BX = neighbours_in(g, X, Cp - X)
        A.append(X)
        B.append(BX)
        Cp -= X | BX
    cols = Columns(tuple(frozenset(a) for a in A), tuple(frozenset(b) for b in B),
                   frozenset(Cp))
    if strict:
        ok = mg.mu(Cp) >= 1 - 3 * k * eps and all(
            mg.mu(neighbours_in(g, B[i], Cp)) >= kappa - 3 * k * eps for i in range(k))
        if not ok:
            blame_local(mg, eps, set().union(*A, *B) if A else ())
            raise StepFailure("columns", "final mass bounds fail", {"k": k})
    return cols


@catch_violation
def build_columns(mg: MassedGraph, k: int, kappa, eps, strict: bool = True):
    """Sets ``A_1..A_k``, ``B_1..B_k``, ``C`` with each ``A_i`` connected and
    covering ``B_i``, every ``A_i`` anticomplete to ``C`` and to the other
    columns, ``mu(C) >= 1 - 3k eps`` and every ``B_i`` covering mass at least
    ``kappa - 3k eps`` of ``C``; or a coherence violation at ``eps``.

    With ``strict=False`` the hypotheses and the two mass bounds are not
    enforced.
    """
    kappa, eps = Fraction(kappa), Fraction(eps)
    if k < 0:
        raise ValueError("k must be nonnegative")
    if strict and (kappa + 4 * eps > 1 or (k - 1) * kappa > 1):
        raise ValueError("need kappa + 4 eps <= 1 and (k-1) kappa <= 1")
    return columns(mg, k, kappa, eps, strict)


def _column_kappa(k: int, kappa, eps) -> Fraction:
    return k * (kappa + eps) + 3 * k * eps


def ladder(mg: MassedGraph, k: int, kappa, eps, strict=True) -> Ladder:
    g = mg.graph
    kappa, eps = Fraction(kappa), Fraction(eps)
    # the column lemma only promises kappa' - 3k eps of cover, while the
    # peeling below uses all of kappa' = k (kappa + eps); ask for the slack
    cols = columns(mg, k, _column_kappa(k, kappa, eps), eps, strict)
    rest = set(cols.C)
    Bs, Cs = [], []
    for j in range(k):
        Bj = _minimal_cover(mg, cols.B[j], rest, kappa, grow=True)
        if Bj is None:
            blame_local(mg, eps, cols.B[j])
            raise StepFailure("ladder", "column covers too little of C",
                              {"column": j + 1, "kappa": str(kappa)})
        Cj = neighbours_in(g, Bj, rest)
        rest -= Cj
        Bs.append(frozenset(Bj))
        Cs.append(frozenset(Cj))
    return Ladder(cols.A, tuple(Bs), tuple(Cs), True)


@catch_violation
def build_ladder(mg: MassedGraph, k: int, kappa, eps, strict: bool = True):
    """Half-cleaned ``k``-ladder with ``mu(C_i) >= kappa``, or a violation."""
    kappa, eps = Fraction(kappa), Fraction(eps)
    kp = _column_kappa(k, kappa, eps)
    if strict and ((k - 1) * kp > 1 or kp + 4 * eps > 1):
        raise ValueError("ladder hypotheses on k, kappa, eps fail")
    return ladder(mg, k, kappa, eps, strict)


# -- linking ports ---------------------------------------------------------------

def link(mg: MassedGraph, L: Ladder, ports, pairing, eps) -> dict:
    g = mg.graph
    eps = Fraction(eps)
    ports = list(ports)
    col = {}
    for i, b in enumerate(ports):
        if b not in L.B[i]:
            raise ValueError(f"port {b} is not in B_{i + 1}")
        col[b] = i
    for a in ports:
        if g.adj[a] & set(ports):
            raise ValueError("ports must be pairwise nonadjacent")
    Bu = set().union(*L.B) if L.B else set()
    Cu = set().union(*L.C) if L.C else set()
    witness = {}
    used: set[int] = set()
    for blk in pairing:
        blk = frozenset(blk)
        if len(blk) == 1:
            (s,) = blk
            if s not in col:
                raise ValueError("pairing must be of the ports")
            witness[blk] = (s,)
            continue
        s, t = sorted(blk, key=lambda b: col[b])
        Z = set(ports) | (used & (Bu | Cu))
        near = bfs_distances(g, Z, limit=2)
        X = set(L.C[col[s]]) - set(near)
        Y = set(L.C[col[t]]) - set(near)
        x = y = None
        for cand in sorted(X):
            hit = g.adj[cand] & Y
            if hit:
                x, y = cand, min(hit)
                break
        if x is None:
            blame_pair(mg, eps, X, Y)
            blame_ball(mg, eps, Z, 2)
            raise StepFailure("link", "no edge between the far parts of two C blocks",
                              {"pair": sorted(blk), "forbidden": len(Z)})
        xp = min(g.adj[x] & L.B[col[s]])
        yp = min(g.adj[y] & L.B[col[t]])
        within = set(L.A[col[s]]) | set(L.A[col[t]]) | {s, t, x, y, xp, yp}
        path = shortest_path(g, s, t, within)
        if path is None:
            raise StepFailure("link", "ports not joined through their columns",
                              {"pair": sorted(blk)})
        witness[blk] = tuple(path)
        used |= set(path)
    return witness


@catch_violation
def link_pairing(mg: MassedGraph, L: Ladder, ports, pairing, eps):
    """Pairwise anticomplete induced paths joining each pair of ``pairing``
    (a pairing of the ports ``b_i`` in ``B_i``), or a violation."""
    return link(mg, L, ports, pairing, eps)


# -- versatile copies through a ladder ----------------------------------------

@dataclass(frozen=True)
class LadderSupport:
    """Pruned ladder over the leaf columns.

    ``ports[i]`` is the port ``b_i`` of column ``i``; ``column[c]`` is the
    column of leaf image ``c`` and ``tails[c]`` the path ``Q`` from ``c`` to
    the vertex ``u`` adjacent to that column's port.
    """

    ladder: Ladder
    ports: tuple
    column: dict
    tails: dict
    eps: Fraction


def ladder_route(mg: MassedGraph, T, c) -> VersatileCertificate:
    if len(T) == 1:
        return trivial_copy(mg, T)
    g = mg.graph
    T = headed(T)
    eps = c.eps_r
    L = ladder(mg, c.k, c.ladder_kappa, eps, strict=c.mode == "theorem")
    R = realize(mg, T, L.C, c.ladder_delta, c.ladder_real_eps, check_pre=False)
    spine = T.internal
    xs = spine_walk(g, T, R.X)
    q = len(spine)
    x1 = xs[0]
    dist = bfs_distances(g, x1)
    at = {tv: x for tv, x in zip(spine, xs)}
    leaves = sorted(T.leaves, key=lambda v: R.spread[v])
    copy = dict(at)
    cols, ports, tails, colmap = [], [], {}, {}
    for v in leaves:
        i = R.spread[v]
        xv = at[leaf_parent(T, v)]
        within = set(R.X[v]) | {xv}
        far = q + 4 * (i + 1)
        u = next((w for w in bfs_distances(g, xv, within=within)
                  if dist.get(w, far) >= far), None)
        if u is None:
            blame_ball(mg, eps, [x1], c.r)
            raise StepFailure("ladder-route", "no escape path leaves the ball around x_1",
                              {"leaf": v, "distance": far})
        P = shortest_path(g, xv, u, within)
        b = min(g.adj[u] & L.B[i])
        copy[v] = P[1]
        tails[P[1]] = tuple(P[1:])
        colmap[P[1]] = len(cols)
        cols.append(i)
        ports.append(b)
    if not is_induced_copy(g, T.tree, copy):
        raise StepFailure("ladder-route", "spine and leaves do not induce T", {})
    Z = ball(g, x1, 4 * c.k + q + 4)
    Q = set(ports).union(*tails.values()) if tails else set(ports)
    A_, B_, C_ = [], [], []
    for i, b in zip(cols, ports):
        A_.append(L.A[i])
        B_.append(frozenset(w for w in L.B[i] if not g.adj[w] & Q) | {b})
        C_.append(L.C[i] - Z)
    sub = Ladder(tuple(A_), tuple(B_), tuple(C_), True)
    support = LadderSupport(sub, tuple(ports), colmap, tails, Fraction(eps))
    return VersatileCertificate(T, copy, "ladder", support, mg)


@catch_violation
def versatile_via_ladder(mg: MassedGraph, T, consts):
    """Versatile copy of ``T`` built along a ladder, or a violation of
    ``(eps_r, r)``-coherence."""
    return ladder_route(mg, T, consts)


def ladder_paths(cert: VersatileCertificate, pairing) -> dict:
    """Paths in host ids joining each block of ``pairing`` (host leaf images)."""
    S: LadderSupport = cert.support
    port_blocks = [frozenset(S.ports[S.column[x]] for x in blk) for blk in pairing]
    links = link(cert.host, S.ladder, S.ports, port_blocks, S.eps)
    out = {}
    for blk, pblk in zip(pairing, port_blocks):
        blk = frozenset(blk)
        if len(blk) == 1:
            out[blk] = tuple(blk)
            continue
        s, t = sorted(blk, key=lambda x: S.column[x])
        mid = links[pblk]
        if mid[0] != S.ports[S.column[s]]:
            mid = mid[::-1]
        out[blk] = S.tails[s] + mid + S.tails[t][::-1]
    return out
