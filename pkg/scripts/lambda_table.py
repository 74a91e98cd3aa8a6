"""Print lambda(t) and h*(t) for the named example graphs."""

from rootpoly import greedoid as gd
from rootpoly.corpus import named_graphs
from rootpoly.ehrhart import hstar_from_ehrhart
from rootpoly.polytope import dimension, dual_root_polytope


for name, G in named_graphs().items():
    P = dual_root_polytope(G)
    lam = gd.greedoid_polynomial(gd.BranchingGreedoid(G, 1))
    print(f"{name:12s} n={G.n} m={G.m} dim={dimension(P)}  lambda = {str(lam):<20s} h* = {hstar_from_ehrhart(P)}")
