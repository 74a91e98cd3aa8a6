"""Labeled edge list of the marked arborescence in the 6-vertex example, and
lambda / h* of that graph for every root."""

from rootpoly import digraph as dg
from rootpoly import greedoid as gd
from rootpoly.corpus import SIX_VERTEX, SIX_VERTEX_ARBORESCENCE
from rootpoly.ehrhart import ehrhart_polynomial, hstar_from_ehrhart
from rootpoly.polytope import dimension, dual_root_polytope


def main():
    L = dg.burning_edge_list(SIX_VERTEX, 1, SIX_VERTEX_ARBORESCENCE)
    print("edge list:", ",".join(str(x.edge) for x in L))
    P = dual_root_polytope(SIX_VERTEX)
    print("dim Q =", dimension(P))
    print("Ehrhart:", ehrhart_polynomial(P))
    print("h*:", hstar_from_ehrhart(P))
    for r in SIX_VERTEX.vertices:
        lam = gd.greedoid_polynomial(gd.BranchingGreedoid(SIX_VERTEX, r), "activity")
        print(f"root {r}: lambda = {lam}")


if __name__ == "__main__":
    main()
