"""Brute-force ground truth and the certificate verifier.

Nothing here calls engine code.  The searches are plain exhaustive
backtracking, and :func:`verify_certificate` re-checks each structure from the
raw adjacency sets and mass values, clause by clause, returning the first
clause that fails.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .graph_core import Graph, Mass, MassedGraph
from .pattern import Pattern, Verdict

__all__ = [
    "Certificate", "SearchResult", "CliqueStable", "certify",
    "search_filleting_bruteforce", "max_anticomplete_pair_exact",
    "clique_and_stable_exact", "verify_certificate",
]


# -- brute-force filleting search -------------------------------------------

@dataclass(frozen=True)
class SearchResult:
    """``status`` is ``found``, ``none`` or ``exhausted``."""

    status: str
    vertices: tuple = ()
    branch: dict = field(default_factory=dict)
    threads: dict = field(default_factory=dict)
    nodes: int = 0

    def __bool__(self):
        return self.status == "found"


class _Budget(Exception):
    pass


def search_filleting_bruteforce(G: Graph, pat: Pattern, node_budget: int = 1_000_000) -> SearchResult:
    """Look for an induced ``P``-filleting of ``H`` in ``G`` by exhaustive search.

    Branch images are placed one at a time (adjacent exactly along the edges
    of ``P``); then every edge of ``H`` off ``P`` is routed as an induced
    thread with at least one interior vertex, keeping the chosen vertex set
    induced-correct at every step.  Each placement or path extension counts
    one node.
    """
    H = pat.H
    on_path = {frozenset(e) for e in zip(pat.path, pat.path[1:])}
    other = [tuple(sorted(e)) for e in H.edges() if frozenset(e) not in on_path]
    adj = G.adj
    nodes = 0
    if G.n < H.n + len(other):
        return SearchResult("none")
    # a branch vertex keeps all its H edges (as edges or thread ends)
    need = [H.degree(h) for h in range(H.n)]
    along = [[frozenset((g, h)) in on_path for g in range(H.n)] for h in range(H.n)]

    def tick():
        nonlocal nodes
        nodes += 1
        if nodes > node_budget:
            raise _Budget

    img: list[int] = []
    chosen: set[int] = set()
    threads: dict = {}

    def route(idx):
        if idx == len(other):
            return True
        a, b = img[other[idx][0]], img[other[idx][1]]
        path = [a]

        def extend():
            tick()
            last = path[-1]
            for x in sorted(adj[last]):
                if x in chosen or x == b:
                    continue
                # x may only touch the current end, and b (which closes it)
                bad = False
                for y in adj[x]:
                    if y in chosen and y != last and y != b:
                        bad = True
                        break
                if bad or (len(path) > 1 and a in adj[x]):
                    continue
                path.append(x)
                chosen.add(x)
                if b in adj[x]:
                    threads[other[idx]] = tuple(path[1:])
                    if route(idx + 1):
                        return True
                    del threads[other[idx]]
                elif extend():
                    return True
                chosen.discard(x)
                path.pop()
            return False

        return extend()

    big = [frozenset(v for v in range(G.n) if len(adj[v]) >= need[h]) for h in range(H.n)]

    def place(h):
        if h == H.n:
            return route(0)
        # adjacent to earlier images exactly along the edges of P
        cand = big[h] - chosen
        row = along[h]
        for g in range(h):
            cand = cand & adj[img[g]] if row[g] else cand - adj[img[g]]
        for v in sorted(cand):
            tick()
            img.append(v)
            chosen.add(v)
            if place(h + 1):
                return True
            chosen.discard(v)
            img.pop()
        return False

    try:
        ok = place(0)
    except _Budget:
        return SearchResult("exhausted", nodes=nodes)
    if not ok:
        return SearchResult("none", nodes=nodes)
    branch = dict(enumerate(img))
    verts = tuple(sorted(chosen))
    return SearchResult("found", verts, branch, dict(threads), nodes)


# -- exact pair, clique and stable set --------------------------------------

def max_anticomplete_pair_exact(G: Graph, mass: Mass | None = None):
    """Disjoint anticomplete ``(A, B)`` maximising ``min(|A|, |B|)``.

    With ``mass`` the objective is ``min(mu(A), mu(B))`` instead.  Returns
    ``None`` when no pair of nonempty sets exists.  For each ``A`` the best
    partner is ``V - N[A]``, so running over all ``A`` covers every labelling
    of the vertices into A, B and neither.
    """
    n = G.n
    if n > 15:
        raise ValueError("exact pair enumeration is limited to n <= 15")
    w = mass.num if mass is not None else [1] * n
    closed = [(1 << v) | sum(1 << u for u in G.adj[v]) for v in range(n)]
    full = (1 << n) - 1
    best, arg = 0, None
    for m in range(1, 1 << n):
        cl, sa = 0, 0
        for v in range(n):
            if m >> v & 1:
                cl |= closed[v]
                sa += w[v]
        rest = full & ~cl
        if not rest:
            continue
        sb = sum(w[v] for v in range(n) if rest >> v & 1)
        val = min(sa, sb)
        if arg is None or val > best:
            best, arg = val, (m, rest)
    if arg is None:
        return None
    bits = lambda m: frozenset(v for v in range(n) if m >> v & 1)
    return bits(arg[0]), bits(arg[1])


@dataclass(frozen=True)
class CliqueStable:
    clique: frozenset
    stable: frozenset
    exact: bool = True

    @property
    def omega(self) -> int:
        return len(self.clique)

    @property
    def alpha(self) -> int:
        return len(self.stable)


def _max_clique(nb: list[int], n: int, budget: list[int]) -> int:
    """Bitset branch and bound with a greedy colouring bound."""
    best = [0]

    def colour_order(P):
        order, bounds = [], []
        colour = 0
        while P:
            colour += 1
            Q = P
            while Q:
                v = (Q & -Q).bit_length() - 1
                Q &= ~(1 << v) & ~nb[v]
                P &= ~(1 << v)
                order.append(v)
                bounds.append(colour)
        return order, bounds

    def expand(R, size, P):
        budget[0] -= 1
        if budget[0] < 0:
            return
        order, bounds = colour_order(P)
        for v, bound in zip(reversed(order), reversed(bounds)):
            if size + bound <= _popcount(best[0]):
                return
            R2 = R | (1 << v)
            P2 = P & nb[v]
            if P2:
                expand(R2, size + 1, P2)
            elif size + 1 > _popcount(best[0]):
                best[0] = R2
            P &= ~(1 << v)

    if n:
        expand(0, 0, (1 << n) - 1)
    return best[0]


def _popcount(m: int) -> int:
    return bin(m).count("1")


def clique_and_stable_exact(G: Graph, budget: int = 2_000_000) -> CliqueStable:
    """Maximum clique and maximum stable set of ``G`` (``n <= 60``).

    ``exact`` is false when the node budget ran out; the witnesses are then
    the best found so far (still a genuine clique and stable set).
    """
    n = G.n
    if n > 60:
        raise ValueError("exact clique search is limited to n <= 60")
    nb = [sum(1 << u for u in G.adj[v]) for v in range(n)]
    full = (1 << n) - 1
    co = [full & ~nb[v] & ~(1 << v) for v in range(n)]
    left = [budget]
    c = _max_clique(nb, n, left)
    s = _max_clique(co, n, left)
    bits = lambda m: frozenset(v for v in range(n) if m >> v & 1)
    C, S = bits(c), bits(s)
    if n:
        C = C or frozenset([0])
        S = S or frozenset([0])
    return CliqueStable(C, S, left[0] >= 0)


# -- certificates --------------------------------------------------------------

@dataclass
class Certificate:
    """``kind`` tag, the structure in ``payload`` and the parameters it
    claims in ``params``; both are plain JSON values."""

    kind: str
    payload: dict
    params: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"kind": self.kind, "params": self.params, "payload": self.payload}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=1)

    @classmethod
    def from_dict(cls, d: dict) -> "Certificate":
        return cls(d["kind"], d.get("payload", {}), d.get("params", {}))

    @classmethod
    def from_json(cls, text: str) -> "Certificate":
        return cls.from_dict(json.loads(text))


def _q(x) -> str:
    return str(Fraction(x))


def _ids(S) -> list[int]:
    return sorted(int(v) for v in S)


def _tree_json(tree: Graph) -> dict:
    return {"n": tree.n, "edges": [list(e) for e in tree.edges()]}


def certify(obj, **params) -> Certificate:
    """Wrap an engine result as a :class:`Certificate`.

    Recognised by type name: ``Violation``, ``Filleting`` (needs
    ``pattern=``), ``Realization``, ``Columns`` (``k, kappa, eps``),
    ``Ladder`` (``kappa``) and ``VersatileCertificate`` (optional
    ``witnesses=[(pairing, paths), ...]``).
    """
    name = type(obj).__name__
    if name == "Violation":
        pl = {"type": obj.kind}
        if obj.v is not None:
            pl["v"] = obj.v
        if obj.r is not None:
            pl["r"] = obj.r
        if obj.kind == "anticomplete-pair":
            pl["A"], pl["B"] = _ids(obj.A), _ids(obj.B)
        return Certificate("violation", pl, {"eps": _q(obj.eps)})
    if name == "Filleting":
        pat: Pattern = params.pop("pattern")
        pl = {"vertices": list(obj.vertices),
              "branch": {str(h): v for h, v in sorted(obj.branch.items())},
              "threads": [[e[0], e[1], list(th)] for e, th in sorted(obj.threads.items())]}
        pr = {"H": _tree_json(pat.H), "path": list(pat.path)}
        return Certificate("filleting", pl, pr)
    if name == "Realization":
        T = obj.T
        pl = {"tree": _tree_json(T.tree), "head": T.head,
              "X": {str(v): _ids(X) for v, X in sorted(obj.X.items())}}
        pr = {"delta": _q(obj.delta)}
        if obj.centres:
            pl["centres"] = {str(v): c for v, c in sorted(obj.centres.items())}
            pr["radius"] = obj.radius
        if "family" in params:
            pl["family"] = [_ids(Y) for Y in params.pop("family")]
            pl["spread"] = {str(v): i for v, i in sorted(obj.spread.items())}
        return Certificate("realization", pl, pr)
    if name == "Columns":
        pl = {"A": [_ids(a) for a in obj.A], "B": [_ids(b) for b in obj.B], "C": _ids(obj.C)}
        pr = {"k": obj.k, "kappa": _q(params["kappa"]), "eps": _q(params["eps"])}
        return Certificate("columns", pl, pr)
    if name == "Ladder":
        pl = {"A": [_ids(a) for a in obj.A], "B": [_ids(b) for b in obj.B],
              "C": [_ids(c) for c in obj.C]}
        pr = {"half_cleaned": bool(obj.half_cleaned)}
        if "kappa" in params:
            pr["kappa"] = _q(params["kappa"])
        return Certificate("ladder", pl, pr)
    if name == "VersatileCertificate":
        tree = obj.T.tree
        pl = {"tree": _tree_json(tree),
              "copy": {str(t): v for t, v in sorted(obj.copy.items())}}
        wits = params.pop("witnesses", None)
        if wits is not None:
            pl["witnesses"] = [_witness_json(p, w) for p, w in wits]
            pl["all_pairings"] = bool(params.pop("all_pairings", False))
        return Certificate("versatile", pl, {"route": obj.route})
    raise TypeError(f"cannot certify {name}")


def _witness_json(pairing, paths) -> dict:
    blocks = sorted(_ids(b) for b in pairing)
    return {"pairing": blocks,
            "paths": [list(paths.get(frozenset(b), tuple(b))) for b in blocks]}


# -- verifier ------------------------------------------------------------------

class _Fail(Exception):
    pass


def _need(cond, clause):
    if not cond:
        raise _Fail(clause)


class _Host:
    """Raw adjacency plus integer mass numerators, read once."""

    def __init__(self, G):
        if isinstance(G, MassedGraph):
            self.g, m = G.graph, G.mass
        else:
            self.g, m = G, Mass.uniform(G.n)
        self.num, self.den = list(m.num), m.den
        self.adj = self.g.adj
        self.n = self.g.n

    def mu(self, X) -> Fraction:
        return Fraction(sum(self.num[x] for x in X), self.den)

    def vset(self, X, what) -> set[int]:
        out = set()
        for x in X:
            _need(isinstance(x, int) and 0 <= x < self.n, f"{what}: vertex ids valid")
            out.add(x)
        _need(len(out) == len(list(X)), f"{what}: no repeated vertices")
        return out

    def anti(self, A, B) -> bool:
        return not any(self.adj[a] & B for a in A)

    def covers(self, A, B) -> bool:
        return all(self.adj[b] & A for b in B)

    def connected(self, X) -> bool:
        if not X:
            return False
        start = min(X)
        seen, stack = {start}, [start]
        while stack:
            v = stack.pop()
            for u in self.adj[v]:
                if u in X and u not in seen:
                    seen.add(u)
                    stack.append(u)
        return len(seen) == len(X)

    def dist_within(self, X, s) -> dict:
        seen, frontier, d = {s: 0}, [s], 0
        while frontier:
            d += 1
            nxt = []
            for v in frontier:
                for u in self.adj[v]:
                    if u in X and u not in seen:
                        seen[u] = d
                        nxt.append(u)
            frontier = nxt
        return seen

    def closed(self, X) -> set[int]:
        out = set(X)
        for x in X:
            out |= self.adj[x]
        return out


def verify_certificate(G, cert) -> Verdict:
    """Re-check a certificate against the host graph (and mass).

    ``cert`` is a :class:`Certificate` or its dict form.  The verdict's
    ``clause`` names the first defining condition that fails.
    """
    if isinstance(cert, dict):
        cert = Certificate.from_dict(cert)
    h = _Host(G)
    check = _CHECKS.get(cert.kind)
    if check is None:
        return Verdict(False, f"unknown certificate kind {cert.kind!r}")
    try:
        check(h, cert.payload, cert.params)
    except _Fail as f:
        return Verdict(False, str(f))
    except (KeyError, TypeError, ValueError) as e:
        return Verdict(False, f"malformed payload ({type(e).__name__}: {e})")
    return Verdict(True)


def _check_violation(h: _Host, pl, pr):
    eps = Fraction(pr["eps"])
    _need(eps > 0, "eps positive")
    kind = pl["type"]
    if kind == "heavy-vertex":
        v = pl["v"]
        h.vset([v], "v")
        _need(h.mu([v]) >= eps, "mu({v}) >= eps")
    elif kind == "heavy-neighbourhood":
        v = pl["v"]
        h.vset([v], "v")
        _need(h.mu(h.adj[v]) >= eps, "mu(N(v)) >= eps")
    elif kind == "heavy-ball":
        v, r = pl["v"], pl["r"]
        h.vset([v], "v")
        _need(isinstance(r, int) and r >= 0, "radius is a nonnegative integer")
        ball = h.dist_within(range(h.n), v)
        _need(h.mu([u for u, d in ball.items() if d <= r]) >= eps, "mu(ball(v, r)) >= eps")
    elif kind == "anticomplete-pair":
        A, B = h.vset(pl["A"], "A"), h.vset(pl["B"], "B")
        _need(not A & B, "A and B disjoint")
        _need(h.anti(A, B), "A anticomplete to B")
        _need(h.mu(A) >= eps, "mu(A) >= eps")
        _need(h.mu(B) >= eps, "mu(B) >= eps")
    else:
        raise _Fail(f"unknown violation type {kind!r}")


def _graph_of(d) -> Graph:
    return Graph.from_edges(d["n"], [tuple(e) for e in d["edges"]])


def _check_filleting(h: _Host, pl, pr):
    H = _graph_of(pr["H"])
    path = list(pr["path"])
    on_path = {frozenset(e) for e in zip(path, path[1:])}
    for e in on_path:
        _need(len(e) == 2 and H.has_edge(*e), "P is a path of H")
    branch = {int(k): v for k, v in pl["branch"].items()}
    _need(set(branch) == set(range(H.n)), "every H vertex has a branch vertex")
    bset = h.vset(branch.values(), "branch")
    _need(len(bset) == H.n, "branch vertices distinct")
    verts = h.vset(pl["vertices"], "vertices")
    threads = {}
    for a, b, inner in pl["threads"]:
        threads[frozenset((a, b))] = (a, b, list(inner))
    other = {frozenset(e) for e in H.edges()} - on_path
    _need(set(threads) == other, "one thread per edge of H off P")
    # expected edge set of the filleting, in host ids
    want = set()
    used = set(bset)
    for e in on_path:
        a, b = tuple(e)
        want.add(frozenset((branch[a], branch[b])))
    for e, (a, b, inner) in threads.items():
        _need(len(inner) >= 1, "edges off P are subdivided")
        iset = h.vset(inner, "thread")
        _need(not iset & used, "threads internally disjoint")
        used |= iset
        seq = [branch[a]] + inner + [branch[b]]
        want |= {frozenset(p) for p in zip(seq, seq[1:])}
    _need(used == verts, "vertices are branch vertices and thread interiors")
    have = {frozenset((u, v)) for u in verts for v in h.adj[u] if v in verts}
    _need(have == want, "induced subgraph is exactly the filleting")


def _tree_parent(T: Graph, head: int) -> dict:
    par, stack = {head: None}, [head]
    while stack:
        v = stack.pop()
        for u in T.adj[v]:
            if u not in par:
                par[u] = v
                stack.append(u)
    return par


def _check_realization(h: _Host, pl, pr):
    T = _graph_of(pl["tree"])
    delta = Fraction(pr["delta"])
    heads = pl.get("heads", [pl.get("head")])
    X = {int(v): h.vset(S, f"X_{v}") for v, S in pl["X"].items()}
    _need(set(X) == set(range(T.n)), "a set for every tree vertex")
    par = {}
    for hd in heads:
        par.update(_tree_parent(T, hd))
    _need(len(par) == T.n, "every component has a head")
    for u, v in combinations(range(T.n), 2):
        _need(not X[u] & X[v], "sets pairwise disjoint")
    for u in range(T.n):
        p = par[u]
        if p is not None:
            _need(h.covers(X[u], X[p]), "X_u covers X_v toward the head")
    for u, v in combinations(range(T.n), 2):
        if not T.has_edge(u, v):
            _need(h.anti(X[u], X[v]), "nonadjacent tree vertices anticomplete")
    for v in range(T.n):
        if v in heads:
            _need(h.mu(X[v]) >= delta, "head sets have mass >= delta")
        else:
            _need(h.connected(X[v]), "non-head sets connected")
            _need(h.mu(h.closed(X[v])) >= delta, "non-head sets delta-dominant")
    if "centres" in pl:
        r = pr["radius"]
        for v, c in pl["centres"].items():
            S = X[int(v)]
            _need(c in S, "centre lies in its set")
            d = h.dist_within(S, c)
            _need(len(d) == len(S) and max(d.values()) <= r, "centre is an r-centre")
    if "family" in pl:
        fam = [h.vset(Y, "family") for Y in pl["family"]]
        for a, b in combinations(fam, 2):
            _need(not a & b, "family members disjoint")
        spread = {int(v): i for v, i in pl["spread"].items()}
        _need(len(set(spread.values())) == len(spread) == T.n, "spread into distinct members")
        for v, i in spread.items():
            _need(X[v] <= fam[i], "X_v inside its family member")


def _blocks(h, pl, key):
    return [h.vset(S, f"{key}_{i + 1}") for i, S in enumerate(pl[key])]


def _disjoint_all(sets, clause):
    seen = set()
    for S in sets:
        _need(not S & seen, clause)
        seen |= S


def _check_columns(h: _Host, pl, pr):
    A, B = _blocks(h, pl, "A"), _blocks(h, pl, "B")
    C = h.vset(pl["C"], "C")
    k = len(A)
    _need(len(B) == k and pr.get("k", k) == k, "k columns")
    kappa, eps = Fraction(pr["kappa"]), Fraction(pr["eps"])
    _disjoint_all(A + B + [C], "sets pairwise disjoint")
    for i in range(k):
        _need(h.connected(A[i]), "A_i connected")
        _need(h.covers(A[i], B[i]), "A_i covers B_i")
        _need(h.anti(A[i], C), "A_i anticomplete to C")
    for i in range(k):
        for j in range(k):
            if i != j:
                _need(h.anti(A[i], A[j] | B[j]), "A_i anticomplete to A_j and B_j")
    _need(h.mu(C) >= 1 - 3 * k * eps, "mu(C) >= 1 - 3k eps")
    for i in range(k):
        cov = [c for c in C if h.adj[c] & B[i]]
        _need(h.mu(cov) >= kappa - 3 * k * eps, "C covered by B_i has mass >= kappa - 3k eps")


def _check_ladder(h: _Host, pl, pr):
    A, B, C = _blocks(h, pl, "A"), _blocks(h, pl, "B"), _blocks(h, pl, "C")
    k = len(A)
    _need(len(B) == k and len(C) == k, "k rows of A, B, C")
    _disjoint_all(A + B + C, "sets pairwise disjoint")
    for i in range(k):
        _need(h.connected(A[i]), "A_i connected")
        _need(h.covers(A[i], B[i]), "A_i covers B_i")
        _need(h.covers(B[i], C[i]), "B_i covers C_i")
        _need(h.anti(A[i], C[i]), "A_i anticomplete to C_i")
    for i in range(k):
        for j in range(k):
            if i != j:
                _need(h.anti(A[i], A[j] | B[j] | C[j]), "A_i anticomplete to A_j, B_j, C_j")
    if pr.get("half_cleaned", False):
        for i in range(k):
            for j in range(i + 1, k):
                _need(h.anti(B[i], C[j]), "B_i anticomplete to C_j for i < j")
    if "kappa" in pr:
        kappa = Fraction(pr["kappa"])
        for i in range(k):
            _need(h.mu(C[i]) >= kappa, "mu(C_i) >= kappa")


def _induced_copy(h: _Host, T: Graph, copy: dict):
    _need(set(copy) == set(range(T.n)), "copy maps every tree vertex")
    imgs = [copy[t] for t in range(T.n)]
    h.vset(imgs, "copy")
    for a, b in combinations(range(T.n), 2):
        _need(T.has_edge(a, b) == (imgs[b] in h.adj[imgs[a]]), "copy is induced")


def _feasible(h: _Host, T: Graph, copy: dict, blocks, paths):
    imgs = {copy[t] for t in range(T.n)}
    leaves = {copy[t] for t in range(T.n) if T.degree(t) == 1}
    covered = set()
    for b in blocks:
        _need(len(b) in (1, 2) and not set(b) & covered, "pairing blocks disjoint, size 1 or 2")
        covered |= set(b)
    _need(covered == leaves, "pairing covers exactly the leaves")
    core = imgs - leaves
    near_core = h.closed(core)
    sets = []
    for b, p in zip(blocks, paths):
        P = h.vset(p, "path")
        if len(b) == 1:
            _need(list(p) == list(b), "singleton path is its vertex")
        else:
            _need({p[0], p[-1]} == set(b) and len(p) >= 2, "path joins its block")
            _need(len(P) == len(p), "path is simple")
            for i, u in enumerate(p):
                nb = set(p[max(i - 1, 0):i + 2]) - {u}
                _need(h.adj[u] & P == nb, "path is induced")
            for u in P - set(b):
                _need(u not in leaves, "path avoids other leaves")
                _need(u not in near_core, "path avoids the spine and its neighbours")
        sets.append(P)
    for a, b in combinations(sets, 2):
        _need(not a & b and h.anti(a, b), "paths pairwise anticomplete")


def _all_pairings(items):
    if not items:
        yield ()
        return
    a, rest = items[0], items[1:]
    for sub in _all_pairings(rest):
        yield ((a,),) + sub
    for i, b in enumerate(rest):
        for sub in _all_pairings(rest[:i] + rest[i + 1:]):
            yield ((a, b),) + sub


def _check_versatile(h: _Host, pl, pr):
    T = _graph_of(pl["tree"])
    copy = {int(t): v for t, v in pl["copy"].items()}
    _induced_copy(h, T, copy)
    seen = set()
    for w in pl.get("witnesses", []):
        blocks = [tuple(sorted(b)) for b in w["pairing"]]
        _feasible(h, T, copy, blocks, w["paths"])
        seen.add(frozenset(blocks))
    if pl.get("all_pairings"):
        leaves = sorted(copy[t] for t in range(T.n) if T.degree(t) == 1)
        for p in _all_pairings(leaves):
            _need(frozenset(p) in seen, "every leaf pairing has a witness")


def _check_witness(h: _Host, pl, pr):
    T = _graph_of(pl["tree"])
    copy = {int(t): v for t, v in pl["copy"].items()}
    _induced_copy(h, T, copy)
    _feasible(h, T, copy, [tuple(b) for b in pl["pairing"]], pl["paths"])


_CHECKS = {
    "violation": _check_violation,
    "filleting": _check_filleting,
    "realization": _check_realization,
    "columns": _check_columns,
    "ladder": _check_ladder,
    "versatile": _check_versatile,
    "witness": _check_witness,
}
