"""The split-or-base recursion for a large clique times stable set.

Each run prints the kind of the root node: an anticomplete split, a sparse
(or co-sparse) restriction, or an exact base case.

Run: python3 demos/clique_or_stable.py
"""
from fractions import Fraction

from fillet.generators import generate_instance
from fillet.graph_core import Graph, complement
from fillet.reduction import eh_recursion


def cliques(k, size):
    edges = [(b * size + i, b * size + j)
             for b in range(k) for i in range(size) for j in range(i + 1, size)]
    return Graph.from_edges(k * size, edges)


if __name__ == "__main__":
    eps, c = Fraction(1, 10), Fraction(1, 2)
    cases = [
        ("8 disjoint K6", cliques(8, 6)),
        ("complement of it", complement(cliques(8, 6))),
        ("G(60, 1/2)", generate_instance("gnp", {"n": 60, "p": Fraction(1, 2)}, seed=1).graph),
    ]
    for name, g in cases:
        r = eh_recursion(g, eps, c, n0=20)
        print(f"{name:>17}: root {r.trace['kind']:<6} clique {len(r.clique)} x stable "
              f"{len(r.stable)} = {r.product}, meets n^(1/2): {r.claim}")
