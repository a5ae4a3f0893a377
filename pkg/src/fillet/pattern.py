"""Patterns ``(H, P)``, their caterpillar reformulation, and the verifiers.

A pattern asks for an induced subgraph of ``G`` obtained from ``H`` by
subdividing every edge off the path ``P`` at least once and no edge of
``P``.  When ``P`` is Hamiltonian this is the same as finding a copy of a
caterpillar ``T`` (the path plus two pendant leaves per extra edge) whose
target leaf-pairing is feasible.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .graph_core import Graph, bfs_distances, is_connected

__all__ = [
    "Pattern", "RootedCaterpillar", "CaterpillarTarget", "FilletingMatch",
    "Verdict", "hamiltonize", "derive_caterpillar", "ancestors",
    "verify_filleting", "verify_feasibility", "leaf_pairings",
    "normalize_pairing", "named_pattern",
]


@dataclass(frozen=True)
class Pattern:
    H: Graph
    path: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "path", tuple(self.path))
        p = self.path
        if not p:
            raise ValueError("path must have at least one vertex")
        if len(set(p)) != len(p):
            raise ValueError("path vertices must be distinct")
        for v in p:
            if not 0 <= v < self.H.n:
                raise ValueError(f"path vertex {v} out of range")
        for a, b in zip(p, p[1:]):
            if not self.H.has_edge(a, b):
                raise ValueError(f"path step {a}-{b} is not an edge of H")

    @property
    def path_edges(self) -> set[frozenset[int]]:
        return {frozenset(e) for e in zip(self.path, self.path[1:])}

    def is_hamiltonian(self) -> bool:
        return len(self.path) == self.H.n


@dataclass(frozen=True)
class Verdict:
    ok: bool
    clause: str = ""

    def __bool__(self):
        return self.ok


def hamiltonize(pat: Pattern) -> Pattern:
    """Extend ``P`` to a Hamilton path by threading a detour vertex before
    each vertex off the path.

    The off-path vertices are taken in increasing id order; detour vertex
    ``u_i`` gets id ``n + (i - k - 1)`` and is adjacent to the previous
    vertex of the new path and to ``v_i``.
    """
    if pat.is_hamiltonian():
        return pat
    H = pat.H
    on_path = set(pat.path)
    rest = [v for v in range(H.n) if v not in on_path]
    edges = list(H.edges())
    new_path = list(pat.path)
    nxt = H.n
    for v in rest:
        u = nxt
        nxt += 1
        edges += [(new_path[-1], u), (u, v)]
        new_path += [u, v]
    return Pattern(Graph.from_edges(nxt, edges), tuple(new_path))


@dataclass(frozen=True)
class RootedCaterpillar:
    """A caterpillar with a head.

    ``spine`` is a path containing every vertex of degree more than one.
    """

    tree: Graph
    spine: tuple[int, ...]
    head: int

    def __post_init__(self):
        t = self.tree
        if t.n == 0:
            raise ValueError("empty tree")
        if len(t.edges()) != t.n - 1 or not is_connected(t, range(t.n)):
            raise ValueError("not a tree")
        sp = self.spine
        for a, b in zip(sp, sp[1:]):
            if not t.has_edge(a, b):
                raise ValueError("spine is not a path")
        if {v for v in range(t.n) if t.degree(v) > 1} - set(sp):
            raise ValueError("spine misses a vertex of degree > 1")
        if not 0 <= self.head < t.n:
            raise ValueError("head out of range")
        # the head must end some spine: an end of the internal path or a
        # leaf hanging off one
        inner = [v for v in sp if t.degree(v) > 1]
        ends = {inner[0], inner[-1]} if inner else set(range(t.n))
        if self.head not in ends and not (t.degree(self.head) == 1 and t.adj[self.head] & ends):
            raise ValueError("head is not an end of a spine")

    @property
    def leaves(self) -> frozenset[int]:
        return frozenset(v for v in range(self.tree.n) if self.tree.degree(v) == 1)

    @property
    def internal(self) -> tuple[int, ...]:
        """Vertices of degree more than one, in order along the spine from
        the end nearest the head."""
        inner = [v for v in self.spine if self.tree.degree(v) > 1]
        if inner and self.head in inner and inner[-1] == self.head:
            inner.reverse()
        return tuple(inner)

    def __len__(self):
        return self.tree.n


@dataclass(frozen=True)
class CaterpillarTarget:
    """Caterpillar of a Hamiltonian pattern together with its target pairing.

    ``spine_of[i]`` is the ``H`` vertex carried by spine vertex ``i``;
    ``pair_edge`` maps each 2-block of the target pairing to its ``H`` edge.
    """

    T: RootedCaterpillar
    pairing: tuple[frozenset[int], ...]
    spine_of: tuple[int, ...]
    pair_edge: dict = field(hash=False, compare=False, default_factory=dict)


def derive_caterpillar(pat: Pattern) -> CaterpillarTarget:
    if not pat.is_hamiltonian():
        raise ValueError("path must be Hamiltonian; call hamiltonize first")
    H, P = pat.H, pat.path
    q = len(P)
    pos = {v: i for i, v in enumerate(P)}
    extra = sorted(
        tuple(sorted((pos[a], pos[b])))
        for a, b in H.edges() if frozenset((a, b)) not in pat.path_edges
    )
    edges = [(i, i + 1) for i in range(q - 1)]
    nxt = q
    blocks = []
    pair_edge = {}
    for i, j in extra:
        a, b = nxt, nxt + 1
        nxt += 2
        edges += [(i, a), (j, b)]
        blk = frozenset((a, b))
        blocks.append(blk)
        pair_edge[blk] = (P[i], P[j])
    tree = Graph.from_edges(nxt, edges)
    if nxt <= 2:
        head = 0
    else:
        head = next(i for i in range(q) if tree.degree(i) > 1)
    T = RootedCaterpillar(tree, tuple(range(q)), head)
    paired = set().union(*blocks) if blocks else set()
    singles = [frozenset([v]) for v in sorted(T.leaves - paired)]
    return CaterpillarTarget(T, tuple(blocks + singles), tuple(P), pair_edge)


def ancestors(T: RootedCaterpillar) -> list[tuple[frozenset[int], int]]:
    """Ancestor chain ``T_1, ..., T_n`` as ``(vertex set, head)`` pairs.

    Each ancestor is an induced subtree of ``T``; ``T_{i+1}`` adds exactly one
    vertex, adjacent to the head of ``T_i``.
    """
    adj = {v: set(T.tree.adj[v]) for v in range(T.tree.n)}
    head = T.head
    chain = [(frozenset(adj), head)]
    while len(adj) > 1:
        leaves = sorted(u for u in adj[head] if len(adj[u]) == 1)
        if leaves:
            u = leaves[0]
            for w in adj.pop(u):
                adj[w].discard(u)
        else:
            (u,) = adj[head]
            for w in adj.pop(head):
                adj[w].discard(head)
            head = u
        chain.append((frozenset(adj), head))
    return chain[::-1]


# -- filleting recognition ----------------------------------------------------

@dataclass(frozen=True)
class FilletingMatch:
    """``branch[h]`` is the image of ``H`` vertex ``h``; ``threads`` maps each
    subdivided ``H`` edge to its interior vertices in order."""

    branch: dict
    threads: dict


def verify_filleting(J: Graph, pat: Pattern) -> FilletingMatch | None:
    """Decide whether ``J`` is a ``P``-filleting of ``H``.

    Branch vertices are assigned by backtracking (highest ``H``-degree first);
    for a complete assignment every other vertex must have degree two and
    the non-branch vertices must split into threads joining exactly the
    images of the non-path edges.
    """
    H = pat.H
    path_edges = pat.path_edges
    other = [frozenset(e) for e in H.edges() if frozenset(e) not in path_edges]
    mJ, mH = len(J.edges()), len(H.edges())
    if J.n - mJ != H.n - mH or J.n - H.n < len(other):
        return None
    order = sorted(range(H.n), key=lambda h: (-H.degree(h), h))
    cands = {h: [v for v in range(J.n) if J.degree(v) == H.degree(h)] for h in order}
    branch: dict[int, int] = {}
    used: set[int] = set()
    # explicit stack: one candidate iterator per assigned level
    stack = [iter(cands[order[0]])]
    while stack:
        lvl = len(stack) - 1
        h = order[lvl]
        if h in branch:
            used.discard(branch.pop(h))
        for v in stack[-1]:
            if v not in used and _compatible(J, h, v, branch, path_edges):
                branch[h] = v
                used.add(v)
                break
        else:
            stack.pop()
            continue
        if lvl + 1 == len(order):
            threads = _threads(J, branch, other)
            if threads is not None:
                return FilletingMatch(dict(branch), threads)
        else:
            stack.append(iter(cands[order[lvl + 1]]))
    return None


def _compatible(J, h, v, branch, path_edges):
    for h2, v2 in branch.items():
        want = frozenset((h, h2)) in path_edges
        if J.has_edge(v, v2) != want:
            return False
    return True


def _threads(J, branch, other):
    img = set(branch.values())
    inv = {v: h for h, v in branch.items()}
    rest = [v for v in range(J.n) if v not in img]
    if any(J.degree(v) != 2 for v in rest):
        return None
    seen: set[int] = set()
    found = {}
    restset = set(rest)
    for s in rest:
        if s in seen:
            continue
        comp = bfs_distances(J, s, within=restset)
        seen.update(comp)
        ends = [u for c in comp for u in J.adj[c] if u in img]
        if len(ends) != 2 or ends[0] == ends[1]:
            return None
        e = frozenset((inv[ends[0]], inv[ends[1]]))
        if e not in other or e in found:
            return None
        # walk the thread from the end nearer the smaller H vertex
        a = branch[min(e)]
        cur = next(c for c in comp if a in J.adj[c])
        seq, prev = [cur], a
        while len(seq) < len(comp):
            nxt = next(u for u in J.adj[cur] if u != prev and u in comp)
            prev, cur = cur, nxt
            seq.append(cur)
        found[e] = tuple(seq)
    if len(found) != len(other):
        return None
    return {tuple(sorted(e)): seq for e, seq in found.items()}


# -- pairings and feasibility -----------------------------------------------

def normalize_pairing(blocks: Iterable[Iterable[int]]) -> tuple[frozenset[int], ...]:
    out = tuple(frozenset(b) for b in blocks)
    seen: set[int] = set()
    for b in out:
        if len(b) not in (1, 2):
            raise ValueError("pairing blocks have size 1 or 2")
        if b & seen:
            raise ValueError("pairing blocks overlap")
        seen |= b
    return out


def leaf_pairings(leaves: Iterable[int]):
    """Every pairing of ``leaves`` (blocks of size one or two)."""
    items = sorted(leaves)

    def rec(rest):
        if not rest:
            yield ()
            return
        a, tail = rest[0], rest[1:]
        for sub in rec(tail):
            yield (frozenset([a]),) + sub
        for i, b in enumerate(tail):
            for sub in rec(tail[:i] + tail[i + 1:]):
                yield (frozenset((a, b)),) + sub

    return rec(items)


def verify_feasibility(G: Graph, T: Graph, copy: dict, pairing, witness: dict) -> Verdict:
    """Check that ``pairing`` is feasible in ``G`` relative to the copy of ``T``.

    ``copy`` maps ``T`` vertices to ``G`` vertices, ``pairing`` is a pairing
    of the images of the leaves of ``T`` and ``witness`` maps each block to
    its path (a vertex sequence).
    """
    pairing = normalize_pairing(pairing)
    imgs = [copy[t] for t in range(T.n)]
    if len(set(imgs)) != T.n:
        return Verdict(False, "copy is injective")
    for a in range(T.n):
        for b in range(a + 1, T.n):
            if T.has_edge(a, b) != G.has_edge(imgs[a], imgs[b]):
                return Verdict(False, "copy is induced")
    leaves = {copy[t] for t in range(T.n) if T.degree(t) == 1}
    vpi = set().union(*pairing) if pairing else set()
    if vpi != leaves:
        return Verdict(False, "pairing covers exactly the leaves")
    core = set(imgs) - vpi
    paths = []
    for blk in pairing:
        p = tuple(witness.get(blk, tuple(blk) if len(blk) == 1 else ()))
        if len(blk) == 1:
            if p != tuple(blk):
                return Verdict(False, "singleton path is its vertex")
        else:
            if len(p) < 2 or {p[0], p[-1]} != set(blk):
                return Verdict(False, "path joins its block")
            if len(set(p)) != len(p):
                return Verdict(False, "path is simple")
            pset = set(p)
            for i, u in enumerate(p):
                # the only neighbours of u on the path are its two path neighbours
                nb = set(p[max(i - 1, 0):i + 2]) - {u}
                if G.adj[u] & pset != nb:
                    return Verdict(False, "path is induced")
            for u in p:
                if u in vpi and u not in blk:
                    return Verdict(False, "path avoids other leaves")
                if u not in vpi and (u in set(imgs) or G.adj[u] & core):
                    return Verdict(False, "path avoids the spine")
        paths.append(set(p))
    for i in range(len(paths)):
        for j in range(i + 1, len(paths)):
            A, B = paths[i], paths[j]
            if A & B or any(G.adj[a] & B for a in A):
                return Verdict(False, "paths pairwise anticomplete")
    return Verdict(True)


_NAMED = {
    "C4": (4, [(0, 1), (1, 2), (2, 3), (0, 3)], (0, 1, 2, 3)),
    "K4": (4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)], (0, 1, 2, 3)),
    "K23": (5, [(a, b) for a in (0, 1) for b in (2, 3, 4)], (2, 0, 3, 1, 4)),
    "P3": (3, [(0, 1), (1, 2)], (0, 1, 2)),
}


def named_pattern(name: str) -> Pattern:
    """Built-in patterns ``C4``, ``K4``, ``K23`` and ``P3``, each with a
    Hamiltonian path; ``Cn`` and ``Kn`` work for any ``n``."""
    if name in _NAMED:
        n, edges, p = _NAMED[name]
        return Pattern(Graph.from_edges(n, edges), p)
    if name[:1] in "CK" and name[1:].isdigit():
        n = int(name[1:])
        if name[0] == "C" and n >= 3:
            return Pattern(Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)]), range(n))
        if name[0] == "K" and n >= 1:
            return Pattern(Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)]),
                           range(n))
    raise ValueError(f"unknown pattern {name!r}")
