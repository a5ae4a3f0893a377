"""Shared plumbing for the constructive steps: outcomes, blame helpers and
the constants record."""
from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Iterable

from ..graph_core import (
    MassedGraph, Violation, anticomplete_pair, ball, heavy_ball,
    heavy_neighbourhood, heavy_vertex,
)


class StepFailure(Exception):
    """A step could not reach its conclusion and no coherence violation
    explains why.  Only possible when the thresholds are user supplied."""

    def __init__(self, lemma: str, step: str, state: dict | None = None):
        super().__init__(f"{lemma}: {step}")
        self.lemma = lemma
        self.step = step
        self.state = state or {}


class FocusBreak(Exception):
    """A set of mass at least ``delta`` none of whose balls of the focus
    radius carries half its mass."""

    def __init__(self, Z: Iterable[int], radius: int):
        self.Z = frozenset(Z)
        self.radius = radius
        super().__init__(f"no heavy {radius}-ball in a set of {len(self.Z)} vertices")


class ViolationFound(Exception):
    """Internal carrier so that deep steps can bail out with a witness."""

    def __init__(self, violation: Violation):
        super().__init__(violation.kind)
        self.violation = violation


# -- blame ------------------------------------------------------------------
# Each helper raises ViolationFound when the named inequality holds exactly
# and returns quietly otherwise.

def blame_vertices(mg: MassedGraph, eps, vertices) -> None:
    eps = Fraction(eps)
    for v in sorted(set(vertices)):
        if mg.mu([v]) >= eps:
            raise ViolationFound(heavy_vertex(mg, v, eps))


def blame_neighbourhoods(mg: MassedGraph, eps, vertices) -> None:
    eps = Fraction(eps)
    adj = mg.graph.adj
    for v in sorted(set(vertices)):
        if mg.mu(adj[v]) >= eps:
            raise ViolationFound(heavy_neighbourhood(mg, v, eps))


def blame_local(mg: MassedGraph, eps, vertices) -> None:
    blame_vertices(mg, eps, vertices)
    blame_neighbourhoods(mg, eps, vertices)


def blame_ball(mg: MassedGraph, eps, centres, r: int) -> None:
    eps = Fraction(eps)
    for v in sorted(set(centres)):
        if mg.mu(ball(mg.graph, v, r)) >= eps:
            raise ViolationFound(heavy_ball(mg, v, r, eps))


def blame_pair(mg: MassedGraph, eps, A, B) -> None:
    """Raise if ``A``, ``B`` are disjoint, anticomplete and both heavy."""
    eps = Fraction(eps)
    A, B = set(A), set(B)
    if not A or not B or A & B:
        return
    if mg.mu(A) < eps or mg.mu(B) < eps:
        return
    adj = mg.graph.adj
    if any(adj[a] & B for a in A):
        return
    # a heavy single vertex is the sharper witness
    for S in (A, B):
        if len(S) == 1:
            blame_vertices(mg, eps, S)
    raise ViolationFound(anticomplete_pair(mg, A, B, eps))


def touch(g, X) -> set[int]:
    """``X`` together with every vertex that has a neighbour in ``X``."""
    out = set(X)
    for x in X:
        out |= g.adj[x]
    return out


def neighbours_in(g, X, S) -> set[int]:
    """Vertices of ``S`` with a neighbour in ``X``."""
    S = set(S)
    out = set()
    for x in X:
        out |= g.adj[x] & S
    return out


# -- constants ----------------------------------------------------------------

def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class Constants:
    """All thresholds used by a run, as exact rationals.

    ``eps`` is the outer coherence threshold, ``eps_r`` the threshold used
    inside the ladder route (after renormalising onto a set ``Z``),
    ``delta = eps / eps_r`` the focussing threshold and ``rho`` the focus
    radius.  ``k`` is both the ladder width and the number of mass blocks
    fed to the realization step.
    """

    t: int
    k: int
    r: int
    eps: Fraction
    eps_r: Fraction
    delta: Fraction
    rho: int
    mode: str = "theorem"
    kappa: Fraction | None = None        # ladder column mass
    real_delta: Fraction | None = None   # head mass in the ladder realization
    real_eps: Fraction | None = None     # epsilon used by realization steps
    focus_k: int | None = None           # number of mass blocks in the focus route
    kappa0: Fraction | None = None       # head mass in the focus realization
    extra: dict = field(default_factory=dict, compare=False, hash=False)

    # -- theorem values -------------------------------------------------
    @classmethod
    def theorem(cls, t: int) -> "Constants":
        if t < 1:
            raise ValueError("t must be positive")
        k = 2 ** t
        r = 5 * k
        e1 = Fraction(1, (k - 1) * k * (2 ** k * (3 * k + 2) + 4)) if k > 1 else Fraction(1, 2)
        e2 = Fraction(1, t ** t * (3 * r + 8))
        eps_r = min(e1, e2, Fraction(1, 2))
        eps = Fraction(1, 2 ** (t + k) * t ** t) * eps_r
        return cls(t=t, k=k, r=r, eps=eps, eps_r=eps_r, delta=eps / eps_r,
                   rho=r + 1, mode="theorem")

    @classmethod
    def exploratory(cls, t: int, eps, **overrides) -> "Constants":
        """User threshold ``eps``; every derived value follows the theorem
        formulas unless overridden by keyword."""
        eps = _frac(eps)
        if eps <= 0:
            raise ValueError("epsilon must be positive")
        k = overrides.pop("k", 2 ** t)
        r = overrides.pop("r", 5 * k)
        eps_r = _frac(overrides.pop("eps_r", eps))
        delta = _frac(overrides.pop("delta", eps / eps_r if eps_r else eps))
        rho = overrides.pop("rho", r + 1)
        fields = {}
        for name in ("kappa", "real_delta", "real_eps", "kappa0"):
            if name in overrides:
                fields[name] = _frac(overrides.pop(name))
        if "focus_k" in overrides:
            fields["focus_k"] = int(overrides.pop("focus_k"))
        if overrides:
            raise TypeError(f"unknown overrides: {sorted(overrides)}")
        return cls(t=t, k=k, r=r, eps=eps, eps_r=eps_r, delta=delta, rho=rho,
                   mode="exploratory", **fields)

    def with_(self, **kw) -> "Constants":
        return replace(self, **kw)

    # -- derived sequences ----------------------------------------------
    @property
    def ladder_kappa(self) -> Fraction:
        if self.kappa is not None:
            return self.kappa
        k = self.k
        return 2 ** k * (3 * k + 2) * self.eps_r

    @property
    def ladder_delta(self) -> Fraction:
        if self.real_delta is not None:
            return self.real_delta
        return (3 * self.k + 1) * self.eps_r

    @property
    def ladder_real_eps(self) -> Fraction:
        return self.real_eps if self.real_eps is not None else self.eps_r

    @property
    def blocks(self) -> int:
        return self.focus_k if self.focus_k is not None else 2 ** self.t

    @property
    def lam(self) -> Fraction:
        return Fraction(1, self.blocks) - self.eps

    @property
    def focus_kappa0(self) -> Fraction:
        if self.kappa0 is not None:
            return self.kappa0
        return self.lam / 2 ** self.blocks - self.eps

    @property
    def focus_real_eps(self) -> Fraction:
        return self.real_eps if self.real_eps is not None else self.eps

    def focus_kappa(self, i: int) -> Fraction:
        """Dominance threshold after ``i`` leaf-shrinking rounds."""
        return self.focus_kappa0 / Fraction(self.t) ** i

    def join_kappa(self, i: int) -> Fraction:
        """Dominance threshold of the ``i``-th leaf-joining round."""
        R = 3 * self.rho + 2
        return (R + 2) * Fraction(self.t) ** (self.t - i + 1) * self.eps

    def as_dict(self) -> dict:
        return {
            "t": self.t, "k": self.k, "r": self.r, "rho": self.rho,
            "mode": self.mode, "eps": str(self.eps), "eps_r": str(self.eps_r),
            "delta": str(self.delta), "kappa": str(self.ladder_kappa),
            "real_delta": str(self.ladder_delta), "blocks": self.blocks,
            "kappa0": str(self.focus_kappa0),
        }


def m_sequence(delta, eps, p: int) -> list[Fraction]:
    """``m_i = 2^i (delta + eps) - eps`` for ``0 <= i <= p``."""
    delta, eps = _frac(delta), _frac(eps)
    return [2 ** i * (delta + eps) - eps for i in range(p + 1)]


# -- certificates ---------------------------------------------------------------

@dataclass
class VersatileCertificate:
    """An induced copy of a caterpillar together with the structure needed to
    join any pairing of its leaves.

    ``copy`` maps tree vertices to vertices of the input graph.  ``support``
    lives on ``host``, which is the input massed graph or, for the ladder
    branch of the dispatcher, a renormalised induced subgraph whose vertex
    ``i`` is ``to_outer[i]`` in the input graph.
    """

    T: object
    copy: dict
    route: str
    support: object
    host: MassedGraph
    to_outer: tuple | None = None
    base: MassedGraph | None = None

    @property
    def graph(self):
        """The input graph (where ``copy`` and extracted paths live)."""
        return (self.base or self.host).graph

    def outer(self, v: int) -> int:
        return v if self.to_outer is None else self.to_outer[v]


def trivial_copy(mg: MassedGraph, T):
    """Certificate for a one-vertex ``T`` (any vertex will do), else ``None``."""
    if len(T) != 1:
        return None
    if mg.graph.n == 0:
        raise ValueError("empty graph")
    return VersatileCertificate(T, {0: 0}, "trivial", None, mg)


def dominant(mg: MassedGraph, X, kappa) -> bool:
    return mg.mu(touch(mg.graph, X)) >= kappa


def is_induced_copy(g, tree, copy: dict) -> bool:
    imgs = [copy[v] for v in range(tree.n)]
    if len(set(imgs)) != len(imgs):
        return False
    return all(tree.has_edge(a, b) == g.has_edge(imgs[a], imgs[b])
               for a in range(tree.n) for b in range(a + 1, tree.n))


def headed(T):
    """``T`` re-rooted, if needed, so that its head is an end of the path of
    internal vertices."""
    from ..pattern import RootedCaterpillar
    inner = [v for v in T.spine if T.tree.degree(v) > 1]
    if not inner or T.head in (inner[0], inner[-1]):
        return T
    return RootedCaterpillar(T.tree, T.spine, inner[0])


def spine_walk(g, T, X: dict) -> list[int]:
    """``x_1`` the least vertex of the head set, then each ``x_i`` the least
    vertex of its set adjacent to ``x_{i-1}``."""
    xs: list[int] = []
    for tv in T.internal:
        cand = set(X[tv]) if not xs else set(X[tv]) & g.adj[xs[-1]]
        if not cand:
            raise StepFailure("spine", "no vertex adjacent to the previous spine vertex",
                              {"tree_vertex": tv})
        xs.append(min(cand))
    return xs


def leaf_parent(T, leaf: int) -> int:
    (p,) = T.tree.adj[leaf]
    return p
