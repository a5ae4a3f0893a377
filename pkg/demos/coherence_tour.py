"""Coherence checks on a few small graphs, with certificates.

Run: python3 demos/coherence_tour.py
"""
from fractions import Fraction

from fillet.graph_core import Graph, MassedGraph, Violation, check_coherence
from fillet.oracle import certify, verify_certificate


def cycle(n):
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def show(name, g, eps):
    mg = MassedGraph.uniform(g)
    out = check_coherence(mg, eps)
    if isinstance(out, Violation):
        cert = certify(out)
        ok = verify_certificate(mg, cert)
        print(f"{name:>8} eps={eps}: {out.kind}, certificate verifies: {bool(ok)}")
    else:
        print(f"{name:>8} eps={eps}: coherent")


if __name__ == "__main__":
    # one vertex carries all the mass
    show("K1", Graph.empty(1), Fraction(1, 2))
    # the star's centre sees almost everything
    show("K1,9", Graph.from_edges(10, [(0, i) for i in range(1, 10)]), Fraction(1, 2))
    # two far arcs of a long cycle see no edge between them
    show("C40", cycle(40), Fraction(1, 4))
    # a clique has no anticomplete pair; its neighbourhoods are light only
    # for a threshold above (k-1)/k
    k = 12
    K = Graph.from_edges(k, [(i, j) for i in range(k) for j in range(i + 1, k)])
    show("K12", K, Fraction(1, 4))
    show("K12", K, Fraction(1))
