"""From a versatile caterpillar copy to an induced filleting of K_{2,3}.

The gen-versatile instance is built for the ladder route, so the focus
route is skipped through the dispatcher's oracle hook.

Run: python3 demos/versatile_to_filleting.py
"""
from fillet.engine import Constants, FocusBreak, extract_paths, find_filleting, find_versatile
from fillet.generators import gen_versatile
from fillet.oracle import certify, verify_certificate
from fillet.pattern import leaf_pairings, named_pattern, verify_filleting


def force_break(mg, Z, r):
    raise FocusBreak(range(mg.n), r)


if __name__ == "__main__":
    inst = gen_versatile(pattern="K23")
    mg, T = inst.massed, inst.meta["T"]
    print(f"host: {mg.n} vertices, {len(mg.graph.edges())} edges; caterpillar on {len(T)} vertices")

    c = Constants.exploratory(len(T), inst.meta["eps"], **inst.meta["overrides"])
    cert = find_versatile(mg, T, c, oracle=force_break)
    leaves = sorted(cert.copy[v] for v in T.leaves)
    pairings = list(leaf_pairings(leaves))
    wits = [(P, extract_paths(cert, P)) for P in pairings]
    print(f"route {cert.route}: joined all {len(pairings)} pairings of {len(leaves)} leaves")
    full = certify(cert, witnesses=wits, all_pairings=True)
    print("certificate verifies:", bool(verify_certificate(mg, full)))

    pat = named_pattern("K23")
    fil = find_filleting(mg, pat, mode="exploratory", eps=inst.meta["eps"],
                         oracle=force_break, **inst.meta["overrides"])
    print(f"filleting on {len(fil.vertices)} vertices, branch vertices {sorted(fil.branch.values())}")
    print("re-verified:", verify_filleting(fil.J, pat) is not None)
