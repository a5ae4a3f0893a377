import itertools
from fractions import Fraction

from hypothesis import strategies as st

from fillet.graph_core import Graph


@st.composite
def graphs(draw, min_n=0, max_n=8):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, keep in zip(pairs, mask) if keep])


def path_graph(n):
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n):
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n):
    return Graph.from_edges(n, list(itertools.combinations(range(n), 2)))


def disjoint_cliques(k, size):
    edges = []
    for b in range(k):
        edges += list(itertools.combinations(range(b * size, (b + 1) * size), 2))
    return Graph.from_edges(k * size, edges)


F = Fraction


# -- acceptance reporting --------------------------------------------------------
# Tests marked ``acceptance(n, title)`` get one PASS/FAIL line each in the
# terminal summary.

_ACCEPTANCE = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(n, title): acceptance criterion")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    info = _ACCEPTANCE.get(report.nodeid)
    if info is not None:
        info["outcome"] = "PASS" if report.passed else "FAIL"


def pytest_collection_modifyitems(items):
    for item in items:
        m = item.get_closest_marker("acceptance")
        if m is not None:
            _ACCEPTANCE[item.nodeid] = {"n": m.args[0], "title": m.args[1], "outcome": "NOT RUN"}


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for info in sorted(_ACCEPTANCE.values(), key=lambda d: d["n"]):
        terminalreporter.write_line(f"criterion {info['n']}: {info['outcome']:4}  {info['title']}")
