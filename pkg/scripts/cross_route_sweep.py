"""Compute lambda by every method on a seeded corpus and tabulate timings.

    python3 scripts/cross_route_sweep.py --count 50 --seed 0
"""

import argparse
import collections
import time

from rootpoly import digraph as dg
from rootpoly import greedoid as gd
from rootpoly.corpus import exhaustive_family, random_family
from rootpoly.polytope import dual_root_polytope


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--count", type=int, default=50)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--n-max", type=int, default=5)
    ap.add_argument("--m-max", type=int, default=9)
    ap.add_argument("--no-exhaustive", action="store_true")
    args = ap.parse_args()

    graphs = [] if args.no_exhaustive else exhaustive_family()
    graphs += random_family(args.count, args.n_max, args.m_max, args.seed)
    timing = collections.Counter()
    mismatches = 0
    for G in graphs:
        P = dual_root_polytope(G)
        ref = None
        for r in G.vertices:
            Gr = gd.BranchingGreedoid(G, r)
            for m in gd.METHODS:
                t0 = time.perf_counter()
                lam = gd.greedoid_polynomial(Gr, m, P=P)
                timing[m] += time.perf_counter() - t0
                ref = ref if ref is not None else lam
                if lam != ref:
                    mismatches += 1
                    print(f"mismatch: {dg.format_digraph(G)!r} root {r} {m}: {lam} vs {ref}")
        rev = gd.greedoid_polynomial(gd.BranchingGreedoid(dg.reverse(G), 1), "activity")
        if rev != ref:
            mismatches += 1
            print(f"reversal mismatch: {dg.format_digraph(G)!r}")
    print(f"{len(graphs)} graphs, {mismatches} mismatches")
    for m in gd.METHODS:
        print(f"  {m:22s} {timing[m]:8.2f}s")


if __name__ == "__main__":
    main()
