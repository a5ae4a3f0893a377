"""Top-level dispatcher, path extraction and the filleting driver."""
from __future__ import annotations

from dataclasses import dataclass

from ..graph_core import (
    Graph, MassedGraph, Violation, ball, check_coherence, induced_subgraph,
)
from ..pattern import (
    Pattern, derive_caterpillar, hamiltonize, normalize_pairing,
    verify_feasibility, verify_filleting,
)
from ._common import (
    Constants, FocusBreak, StepFailure, VersatileCertificate, ViolationFound,
    blame_local, blame_neighbourhoods, blame_pair, blame_vertices, trivial_copy,
)
from .focus import focus_paths, focus_route
from .ladder import ladder_paths, ladder_route
from .realization import catch_violation

__all__ = ["Filleting", "extract_paths", "find_filleting", "find_versatile"]


# -- dispatcher ---------------------------------------------------------------

def _translate(mg: MassedGraph, order: list[int], inner: Violation, eps) -> None:
    """Raise the outer violation implied by a violation inside ``G[Z]``."""
    g = mg.graph
    Z = set(order)
    out = lambda S: {order[v] for v in S}
    if inner.kind == "heavy-vertex":
        blame_vertices(mg, eps, [order[inner.v]])
    elif inner.kind == "heavy-neighbourhood":
        blame_neighbourhoods(mg, eps, [order[inner.v]])
    elif inner.kind == "anticomplete-pair":
        blame_pair(mg, eps, out(inner.A), out(inner.B))
    elif inner.kind == "heavy-ball":
        v = order[inner.v]
        near = ball(g, v, inner.r, within=Z)
        beyond = Z - ball(g, v, inner.r + 1, within=Z)
        blame_pair(mg, eps, near, beyond)
    raise StepFailure("dispatcher", "inner violation does not lift to the whole graph",
                      {"kind": inner.kind, "Z": len(Z)})


def dispatch(mg: MassedGraph, T, c: Constants, oracle=None) -> VersatileCertificate:
    g = mg.graph
    if c.mode == "theorem":
        blame_local(mg, c.eps, range(g.n))
    if len(T) == 2:
        raise ValueError("a single edge is never versatile (its two leaves are adjacent)")
    if len(T) == 1:
        return trivial_copy(mg, T)
    try:
        return focus_route(mg, T, c, oracle)
    except FocusBreak as brk:
        Z = brk.Z
    order = sorted(Z)
    if mg.mu(order) == 0:
        raise StepFailure("dispatcher", "focus broke on a massless set", {})
    sub, order = induced_subgraph(g, order)
    inner = MassedGraph(sub, mg.mass.restrict(order))
    try:
        cert = ladder_route(inner, T, c)
    except ViolationFound as found:
        _translate(mg, order, found.violation, c.eps)
    cert.copy = {tv: order[x] for tv, x in cert.copy.items()}
    cert.to_outer = tuple(order)
    cert.base = mg
    return cert


@catch_violation
def find_versatile(mg: MassedGraph, T, consts: Constants, oracle=None):
    """Versatile copy of the caterpillar ``T``, or a coherence violation.

    Tries the focussed route first; if some requested heavy ball is missing
    the offending set ``Z`` is renormalised and the ladder route runs inside
    it, with its violations lifted back to the whole graph.  ``oracle``
    replaces the default heavy-ball search (useful for testing the switch).
    """
    return dispatch(mg, T, consts, oracle)


def extract_paths(cert: VersatileCertificate, pairing) -> dict:
    """Witness paths for ``pairing`` (blocks of leaf images in the input
    graph), checked for feasibility before being returned."""
    pairing = normalize_pairing(pairing)
    if cert.route == "trivial":
        if pairing:
            raise ValueError("a single vertex has no leaves")
        return {}
    inv = ({v: i for i, v in enumerate(cert.to_outer)}
           if cert.to_outer is not None else None)
    into = (lambda v: v) if inv is None else inv.__getitem__
    inner = [frozenset(into(v) for v in blk) for blk in pairing]
    if cert.route == "ladder":
        paths = ladder_paths(cert, inner)
    else:
        paths = focus_paths(cert, inner)
    witness = {blk: tuple(cert.outer(v) for v in paths[iblk])
               for blk, iblk in zip(pairing, inner)}
    verdict = verify_feasibility(cert.graph, cert.T.tree, cert.copy, pairing, witness)
    if not verdict:
        raise StepFailure("extract-paths", f"witness fails: {verdict.clause}", {})
    return witness


# -- filletings -----------------------------------------------------------------

@dataclass(frozen=True)
class Filleting:
    """An induced subgraph of ``G`` that is a ``P``-filleting of ``H``.

    ``vertices`` lists the ``G`` vertices (vertex ``i`` of ``J`` is
    ``vertices[i]``); ``branch`` and ``threads`` are in ``G`` ids.
    """

    vertices: tuple[int, ...]
    J: Graph
    branch: dict
    threads: dict


def _constants(t, mode, eps, overrides) -> Constants:
    if mode == "theorem":
        return Constants.theorem(t)
    if mode == "exploratory":
        if eps is None:
            raise ValueError("exploratory mode needs eps")
        return Constants.exploratory(t, eps, **overrides)
    raise ValueError(f"unknown mode {mode!r}")


def _blame_no_edge(mg: MassedGraph, eps) -> None:
    g = mg.graph
    blame_vertices(mg, eps, range(g.n))
    A: set[int] = set()
    for v in range(g.n):
        A.add(v)
        if mg.mu(A) >= eps:
            break
    blame_pair(mg, eps, A, set(range(g.n)) - A)


def assemble(mg: MassedGraph, pat: Pattern, keep) -> Filleting:
    sub, order = induced_subgraph(mg.graph, keep)
    match = verify_filleting(sub, pat)
    if match is None:
        raise StepFailure("filleting", "assembled graph is not a filleting", {})
    branch = {h: order[v] for h, v in match.branch.items()}
    threads = {e: tuple(order[v] for v in th) for e, th in match.threads.items()}
    return Filleting(tuple(order), sub, branch, threads)


def filleting(mg, pat, mode="theorem", eps=None, oracle=None, **overrides):
    g = mg.graph
    H = pat.H
    if H.n == 1:
        if g.n == 0:
            raise ValueError("empty graph")
        return assemble(mg, pat, [0])
    if H.n == 2 and pat.is_hamiltonian():
        edges = g.edges()
        if edges:
            return assemble(mg, pat, edges[0])
        c = _constants(2, mode, eps, overrides)
        _blame_no_edge(mg, c.eps)
        raise StepFailure("filleting", "edgeless graph without a heavy pair", {})
    hp = hamiltonize(pat)
    ct = derive_caterpillar(hp)
    c = _constants(len(ct.T), mode, eps, overrides)
    cert = dispatch(mg, ct.T, c, oracle)
    pairing = [frozenset(cert.copy[v] for v in blk) for blk in ct.pairing]
    witness = extract_paths(cert, pairing)
    keep = {cert.copy[i] for i, h in enumerate(ct.spine_of) if h < H.n}
    for blk in pairing:
        if len(blk) == 2:
            keep |= set(witness[blk])
    return assemble(mg, pat, keep)


@catch_violation
def find_filleting(mg: MassedGraph, pat: Pattern, mode: str = "theorem", eps=None,
                   oracle=None, **overrides):
    """Induced ``P``-filleting of ``H`` in ``G``, or a coherence violation.

    ``mode="theorem"`` uses the threshold that makes the search total;
    ``mode="exploratory"`` uses ``eps`` and any keyword overrides accepted by
    :meth:`Constants.exploratory`.  When an exploratory step fails, a direct
    coherence check at ``eps`` is tried before :class:`StepFailure` is
    re-raised.
    """
    try:
        return filleting(mg, pat, mode, eps, oracle, **overrides)
    except StepFailure:
        if mode != "exploratory":
            raise
        found = check_coherence(mg, eps)
        if isinstance(found, Violation):
            return found
        raise
