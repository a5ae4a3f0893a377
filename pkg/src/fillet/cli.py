"""Command line front end: graph files, certificates, generators and sweeps.

This is the only module that reads or writes files.

Graph format, one item per line (blank lines and lines starting with ``c``
are ignored)::

    p <n> <m>
    e <u> <v>                  (m lines, 0-based, no loops or repeats)
    w <r_0> ... <r_{n-1}>      (optional exact rationals summing to 1)
    path <v_0> ... <v_{k-1}>   (optional, pattern files only)
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from .engine import StepFailure, find_filleting
from .generators import generate_instance
from .graph_core import Coherent, Graph, Mass, MassedGraph, Violation, check_coherence
from .oracle import (
    Certificate, certify, clique_and_stable_exact, max_anticomplete_pair_exact,
    search_filleting_bruteforce, verify_certificate,
)
from .pattern import Pattern, named_pattern
from .reduction import eh_recursion

__all__ = [
    "ParseError", "GraphFile", "parse_graph_file", "format_graph", "RunConfig",
    "run_command", "named_pattern", "main",
]


class ParseError(ValueError):
    def __init__(self, line: int, msg: str):
        super().__init__(f"line {line}: {msg}")
        self.line = line


@dataclass
class GraphFile:
    graph: Graph
    mass: Mass
    path: tuple | None = None

    @property
    def massed(self) -> MassedGraph:
        return MassedGraph(self.graph, self.mass)


def _int(tok: str, ln: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(ln, f"expected an integer, got {tok!r}") from None


def parse_graph_file(text: str) -> GraphFile:
    n = m = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    weights = path = None
    for ln, raw in enumerate(text.splitlines(), start=1):
        toks = raw.split()
        if not toks or toks[0] == "c":
            continue
        tag, rest = toks[0], toks[1:]
        if tag == "p":
            if n is not None:
                raise ParseError(ln, "second header line")
            if len(rest) != 2:
                raise ParseError(ln, "header is 'p <n> <m>'")
            n, m = _int(rest[0], ln), _int(rest[1], ln)
            if n < 0 or m < 0:
                raise ParseError(ln, "negative count in header")
            continue
        if n is None:
            raise ParseError(ln, "header 'p <n> <m>' must come first")
        if tag == "e":
            if len(rest) != 2:
                raise ParseError(ln, "edge line is 'e <u> <v>'")
            u, v = _int(rest[0], ln), _int(rest[1], ln)
            if not (0 <= u < n and 0 <= v < n):
                raise ParseError(ln, f"edge endpoint out of range 0..{n - 1}")
            if u == v:
                raise ParseError(ln, "self-loop")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise ParseError(ln, f"duplicate edge {key[0]} {key[1]}")
            seen.add(key)
            edges.append(key)
        elif tag == "w":
            if weights is not None:
                raise ParseError(ln, "second weight line")
            if len(rest) != n:
                raise ParseError(ln, f"weight count {len(rest)} does not match n = {n}")
            try:
                weights = [Fraction(r) for r in rest]
            except (ValueError, ZeroDivisionError):
                raise ParseError(ln, "weights must be exact rationals") from None
            if any(w < 0 for w in weights):
                raise ParseError(ln, "negative weight")
            if sum(weights) != 1:
                raise ParseError(ln, f"weights sum to {sum(weights)}, not 1")
        elif tag == "path":
            if path is not None:
                raise ParseError(ln, "second path line")
            path = tuple(_int(r, ln) for r in rest)
            if not path:
                raise ParseError(ln, "empty path")
            if any(not 0 <= v < n for v in path):
                raise ParseError(ln, "path vertex out of range")
            if len(set(path)) != len(path):
                raise ParseError(ln, "path repeats a vertex")
            bad = [(a, b) for a, b in zip(path, path[1:]) if (min(a, b), max(a, b)) not in seen]
            if bad:
                raise ParseError(ln, f"path step {bad[0][0]}-{bad[0][1]} is not an edge")
        else:
            raise ParseError(ln, f"unknown line type {tag!r}")
    if n is None:
        raise ParseError(0, "missing header")
    if len(edges) != m:
        raise ParseError(0, f"header says {m} edges, found {len(edges)}")
    g = Graph.from_edges(n, edges)
    if weights is not None:
        mass = Mass.weighted(weights)
    elif n > 0:
        mass = Mass.uniform(n)
    else:
        raise ParseError(0, "a graph needs at least one vertex")
    return GraphFile(g, mass, path)


def format_graph(g: Graph, mass: Mass | None = None, path=None) -> str:
    lines = [f"p {g.n} {len(g.edges())}"]
    lines += [f"e {u} {v}" for u, v in g.edges()]
    if mass is not None and mass.kind != "uniform":
        lines.append("w " + " ".join(str(w) for w in mass.weights()))
    if path is not None:
        lines.append("path " + " ".join(str(v) for v in path))
    return "\n".join(lines) + "\n"


# -- patterns ------------------------------------------------------------------------

def load_pattern(spec: str, path_arg=None) -> Pattern:
    try:
        pat = named_pattern(spec)
        H, p = pat.H, pat.path
    except ValueError:
        with open(spec) as fh:
            gf = parse_graph_file(fh.read())
        H, p = gf.graph, gf.path
    if path_arg:
        p = tuple(int(x) for x in path_arg.replace(",", " ").split())
    if p is None:
        raise ValueError("pattern needs a path (a 'path' line or --path)")
    return Pattern(H, p)


# -- commands ------------------------------------------------------------------------

@dataclass
class RunConfig:
    command: str
    inputs: list = field(default_factory=list)
    pattern: str | None = None
    path: str | None = None
    mode: str = "theorem"
    epsilon: Fraction | None = None
    overrides: dict = field(default_factory=dict)
    seed: int = 0
    budget_nodes: int = 1_000_000
    out: str | None = None
    fmt: str = "json"
    extra: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.overrides and self.mode != "exploratory":
            raise ValueError("overrides are only valid with --mode exploratory")
        if self.mode not in ("theorem", "exploratory"):
            raise ValueError("mode is theorem or exploratory")


class UsageError(Exception):
    pass


def _read_graph(cfg: RunConfig) -> GraphFile:
    if not cfg.inputs:
        raise UsageError("--input is required")
    with open(cfg.inputs[0]) as fh:
        return parse_graph_file(fh.read())


def _emit(cfg: RunConfig, text: str, stdout) -> None:
    if cfg.out:
        with open(cfg.out, "w") as fh:
            fh.write(text)
    else:
        stdout.write(text)


def _dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=1) + "\n"


def solve_find(mg: MassedGraph, pat: Pattern, mode: str, eps, overrides: dict):
    """``find_filleting`` wrapped as a certificate; StepFailure propagates."""
    res = find_filleting(mg, pat, mode=mode, eps=eps, **overrides)
    if isinstance(res, Violation):
        return certify(res)
    return certify(res, pattern=pat)


def _cmd_coherence(cfg, stdout):
    gf = _read_graph(cfg)
    if cfg.epsilon is None:
        raise UsageError("--epsilon is required")
    res = check_coherence(gf.massed, cfg.epsilon, r=cfg.extra.get("radius"))
    if isinstance(res, Coherent):
        out = {"kind": "coherent", "params": {"eps": str(cfg.epsilon)},
               "payload": {"heuristic": res.heuristic}}
    else:
        cert = certify(res)
        if not verify_certificate(gf.massed, cert):
            raise RuntimeError("violation failed its own check")
        out = cert.to_dict()
    _emit(cfg, _dumps(out), stdout)
    return 0


def _cmd_find(cfg, stdout):
    gf = _read_graph(cfg)
    if not cfg.pattern:
        raise UsageError("--pattern is required")
    pat = load_pattern(cfg.pattern, cfg.path)
    if cfg.mode == "exploratory" and cfg.epsilon is None:
        raise UsageError("exploratory mode needs --epsilon")
    try:
        cert = solve_find(gf.massed, pat, cfg.mode, cfg.epsilon, cfg.overrides)
    except StepFailure as e:
        _emit(cfg, _dumps({"kind": "step-failure", "lemma": e.lemma, "step": e.step}), stdout)
        return 2
    verdict = verify_certificate(gf.massed, cert)
    if not verdict:
        raise RuntimeError(f"certificate failed verification: {verdict.clause}")
    _emit(cfg, cert.to_json() + "\n", stdout)
    return 0


def _cmd_verify(cfg, stdout):
    gf = _read_graph(cfg)
    cpath = cfg.extra.get("cert")
    if not cpath:
        raise UsageError("--cert is required")
    with open(cpath) as fh:
        cert = Certificate.from_json(fh.read())
    v = verify_certificate(gf.massed, cert)
    _emit(cfg, "true\n" if v else f"false, clause {v.clause}\n", stdout)
    return 0


def _cmd_oracle(cfg, stdout):
    gf = _read_graph(cfg)
    g = gf.graph
    out = {"n": g.n}
    if cfg.pattern:
        pat = load_pattern(cfg.pattern, cfg.path)
        res = search_filleting_bruteforce(g, pat, node_budget=cfg.budget_nodes)
        out["filleting"] = {"status": res.status, "vertices": list(res.vertices),
                            "nodes": res.nodes}
    if g.n <= 15:
        pair = max_anticomplete_pair_exact(g, gf.mass)
        out["max_pair"] = None if pair is None else {
            "A": sorted(pair[0]), "B": sorted(pair[1]),
            "min_mass": str(min(gf.mass(pair[0]), gf.mass(pair[1])))}
    if g.n <= 60:
        cs = clique_and_stable_exact(g)
        out["omega"], out["alpha"], out["exact"] = cs.omega, cs.alpha, cs.exact
    _emit(cfg, _dumps(out), stdout)
    return 0


def _cmd_eh(cfg, stdout):
    gf = _read_graph(cfg)
    eps = cfg.epsilon if cfg.epsilon is not None else Fraction(1, 4)
    c = Fraction(cfg.extra.get("c") or "1/2")
    res = eh_recursion(gf.graph, eps, c)
    out = {"kind": "eh", "params": {"eps": str(eps), "c": str(c)},
           "payload": {"clique": sorted(res.clique), "stable": sorted(res.stable),
                       "product": res.product, "claim": res.claim,
                       "trace": _jsonable(res.trace)}}
    _emit(cfg, _dumps(out), stdout)
    return 0


def _jsonable(x):
    if isinstance(x, dict):
        return {k: _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, (set, frozenset)):
        return sorted(x)
    if isinstance(x, Fraction):
        return str(x)
    return x


def _instance_params(cfg) -> dict:
    raw = cfg.extra.get("params") or "{}"
    params = json.loads(raw)
    if not isinstance(params, dict):
        raise UsageError("--params must be a JSON object")
    return params


def _cmd_gen(cfg, stdout):
    family = cfg.extra.get("family")
    if not family:
        raise UsageError("--family is required")
    inst = generate_instance(family, _instance_params(cfg), cfg.seed)
    _emit(cfg, format_graph(inst.graph, inst.mass), stdout)
    return 0


def _run_one(job):
    family, params, seed, pat_spec, path_arg, mode, eps, overrides, timings = job
    inst = generate_instance(family, params, seed)
    pat = load_pattern(pat_spec, path_arg)
    mg = inst.massed
    t0 = time.perf_counter()
    try:
        cert = solve_find(mg, pat, mode, eps, overrides)
        kind = cert.kind if cert.kind != "violation" else "violation:" + cert.payload["type"]
        verified = bool(verify_certificate(mg, cert))
    except StepFailure as e:
        kind, verified = "step-failure:" + e.lemma, False
    row = {"family": family, "params": json.dumps(params, sort_keys=True), "seed": seed,
           "pattern": pat_spec, "mode": mode, "eps": "" if eps is None else str(eps),
           "outcome": kind, "verified": verified}
    if timings:
        row["seconds"] = f"{time.perf_counter() - t0:.4f}"
    return row


def experiment_rows(family, points, seeds, pat_spec, mode, eps_list, path_arg=None,
                    overrides=None, workers=1, timings=False) -> list[dict]:
    """One row per (parameter point, eps, seed), in that order."""
    jobs = [(family, p, s, pat_spec, path_arg, mode, e, overrides or {}, timings)
            for p in points for e in eps_list for s in seeds]
    if workers > 1:
        with ProcessPoolExecutor(workers) as ex:
            return list(ex.map(_run_one, jobs))
    return [_run_one(j) for j in jobs]


def rows_to_csv(rows: list[dict]) -> str:
    if not rows:
        return ""
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
    w.writeheader()
    w.writerows(rows)
    return buf.getvalue()


def _cmd_experiment(cfg, stdout):
    family = cfg.extra.get("family") or "gnp"
    base = _instance_params(cfg)
    sweep = cfg.extra.get("sweep")
    points = [dict(base)]
    if sweep:
        key, _, vals = sweep.partition("=")
        if not vals:
            raise UsageError("--sweep is key=v1,v2,...")
        points = [{**base, key: _sweep_value(v)} for v in vals.split(",")]
    seeds = range(cfg.seed, cfg.seed + int(cfg.extra.get("seeds") or 1))
    eps_list = cfg.extra.get("eps_list") or [cfg.epsilon]
    if cfg.mode == "exploratory" and None in eps_list:
        raise UsageError("exploratory mode needs --epsilon")
    rows = experiment_rows(family, points, list(seeds), cfg.pattern or "C4", cfg.mode,
                           eps_list, cfg.path, cfg.overrides,
                           int(cfg.extra.get("workers") or 1), bool(cfg.extra.get("timings")))
    text = rows_to_csv(rows) if cfg.fmt == "csv" else _dumps(rows)
    _emit(cfg, text, stdout)
    return 0


def _sweep_value(v: str):
    try:
        return int(v)
    except ValueError:
        return v


_COMMANDS = {
    "coherence": _cmd_coherence, "find": _cmd_find, "verify": _cmd_verify,
    "oracle": _cmd_oracle, "eh": _cmd_eh, "gen": _cmd_gen, "experiment": _cmd_experiment,
}


def run_command(cfg: RunConfig, stdout=None, stderr=None) -> int:
    """Run one command; 0 on a verified result, 2 on StepFailure, 1 on
    usage or I/O errors."""
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        return _COMMANDS[cfg.command](cfg, stdout)
    except (UsageError, ParseError, OSError, ValueError, KeyError, TypeError) as e:
        stderr.write(f"error: {e}\n")
        return 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="fillet", description=__doc__.splitlines()[0])
    ap.add_argument("command", choices=sorted(_COMMANDS))
    ap.add_argument("--input", action="append", default=[], help="graph file")
    ap.add_argument("--pattern", help="pattern file or name (C4, K4, K23, Cn, Kn)")
    ap.add_argument("--path", help="path of the pattern, overriding the file")
    ap.add_argument("--epsilon", type=Fraction, help="coherence threshold (rational)")
    ap.add_argument("--mode", default="theorem", choices=["theorem", "exploratory"])
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--budget-nodes", type=int, default=1_000_000)
    ap.add_argument("--out", help="output file (default stdout)")
    ap.add_argument("--format", default="json", choices=["json", "csv"])
    ap.add_argument("--set", action="append", default=[], metavar="NAME=VALUE",
                    help="exploratory override, e.g. k=4 or kappa=1/100")
    ap.add_argument("--cert", help="certificate file (verify)")
    ap.add_argument("--radius", type=int, help="ball radius (coherence)")
    ap.add_argument("--c", help="exponent c (eh)")
    ap.add_argument("--family", help="generator family (gen, experiment)")
    ap.add_argument("--params", help="generator parameters as a JSON object")
    ap.add_argument("--sweep", help="parameter sweep key=v1,v2,... (experiment)")
    ap.add_argument("--eps-list", help="comma separated epsilons (experiment)")
    ap.add_argument("--seeds", type=int, help="number of seeds (experiment)")
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--timings", action="store_true", help="add a seconds column")
    return ap


def _override(text: str):
    name, _, val = text.partition("=")
    if not val:
        raise UsageError(f"--set expects NAME=VALUE, got {text!r}")
    if name in ("k", "r", "rho", "focus_k"):
        return name, int(val)
    return name, Fraction(val)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        overrides = dict(_override(s) for s in args.set)
        eps_list = [Fraction(e) for e in args.eps_list.split(",")] if args.eps_list else None
        cfg = RunConfig(
            command=args.command, inputs=args.input, pattern=args.pattern, path=args.path,
            mode=args.mode, epsilon=args.epsilon, overrides=overrides, seed=args.seed,
            budget_nodes=args.budget_nodes, out=args.out, fmt=args.format,
            extra={"cert": args.cert, "radius": args.radius, "c": args.c,
                   "family": args.family, "params": args.params, "sweep": args.sweep,
                   "eps_list": eps_list, "seeds": args.seeds, "workers": args.workers,
                   "timings": args.timings})
    except (UsageError, ValueError, ZeroDivisionError) as e:
        sys.stderr.write(f"error: {e}\n")
        return 1
    return run_command(cfg)


