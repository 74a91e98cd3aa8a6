"""The directed branching greedoid and its greedoid polynomial.

Six ways to get lambda(t) are provided.  Three are greedoid-side (greedoid
activity, external semi-activity, h-polynomial of the dual complex) and three
go through h* of the dual root polytope via lambda(t) = t^(d+1) h*(1/t),
where d = dim Q_A = |E| - |V|.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import digraph as dg
from . import ehrhart
from .exact_arith import ScaleCapError
from .polynomial import Polynomial, complex_from_facets, h_polynomial_of_faces
from .polytope import RootPolytope, arborescence_bases, dimension, dual_root_polytope

METHODS = (
    "activity",
    "semiactivity",
    "dual_complex",
    "hstar_ehrhart",
    "hstar_semipassivity",
    "hstar_triangulation",
)
HSTAR_METHODS = frozenset(m for m in METHODS if m.startswith("hstar"))
DUAL_COMPLEX_CAP = 1 << 16


@dataclass(frozen=True)
class BranchingGreedoid:
    graph: dg.Digraph
    root: int

    def __post_init__(self):
        if not dg.is_connected(self.graph):
            raise ValueError("branching greedoid needs a connected digraph")
        if not 1 <= self.root <= self.graph.n:
            raise ValueError(f"root {self.root} out of range")

    def bases(self) -> list[frozenset]:
        return dg.enumerate_arborescences(self.graph, self.root)


@dataclass(frozen=True)
class DualComplex:
    faces: frozenset
    dimension: int

    @property
    def facets(self) -> list[frozenset]:
        top = self.dimension + 1
        return sorted((F for F in self.faces if len(F) == top), key=sorted)


def is_feasible(Gr: BranchingGreedoid, X) -> bool:
    """X is an arborescence rooted at the root (not necessarily spanning)."""
    G = Gr.graph
    X = frozenset(X)
    heads = [G.head(e) for e in X]
    if len(set(heads)) != len(heads) or Gr.root in heads:
        return False
    reached = {Gr.root}
    left = set(X)
    grew = True
    while grew:
        grew = False
        for e in sorted(left):
            if G.tail(e) in reached:
                reached.add(G.head(e))
                left.discard(e)
                grew = True
    return not left


def lex_min_feasible_ordering(Gr: BranchingGreedoid, B) -> tuple[int, ...]:
    """Greedy: always append the smallest edge keeping the prefix feasible."""
    B = frozenset(B)
    if not dg.is_arborescence(Gr.graph, Gr.root, B):
        raise ValueError(f"{sorted(B)} is not a basis of the branching greedoid")
    reached = {Gr.root}
    out = []
    left = set(B)
    while left:
        e = min(f for f in left if Gr.graph.tail(f) in reached)
        out.append(e)
        left.discard(e)
        reached.add(Gr.graph.head(e))
    return tuple(out)


def externally_active_greedoid(Gr: BranchingGreedoid, B, e: int) -> bool:
    """Every feasible exchange B - f + e has a lexicographically larger ordering."""
    B = frozenset(B)
    if e in B:
        raise ValueError(f"edge {e} is in the basis")
    mine = lex_min_feasible_ordering(Gr, B)
    for f in B:
        other = B - {f} | {e}
        if dg.is_arborescence(Gr.graph, Gr.root, other):
            if not mine < lex_min_feasible_ordering(Gr, other):
                return False
    return True


def external_activity(Gr: BranchingGreedoid, B, rule: str = "greedoid") -> int:
    G = Gr.graph
    outside = [e for e in G.edge_ids if e not in B]
    if rule == "greedoid":
        return sum(externally_active_greedoid(Gr, B, e) for e in outside)
    return sum(dg.external_semiactive(G, Gr.root, B, e) for e in outside)


def dual_complex(Gr: BranchingGreedoid) -> DualComplex:
    G = Gr.graph
    bases = Gr.bases()
    k = G.m - G.n + 1
    if len(bases) << k > DUAL_COMPLEX_CAP:
        raise ScaleCapError(f"dual complex would need {len(bases) << k} subsets")
    E = frozenset(G.edge_ids)
    return DualComplex(complex_from_facets(E - F for F in bases), k - 1)


def h_polynomial(C: DualComplex) -> Polynomial:
    """h(x) = f(x - 1) with f(y) = sum_F y^(d - dim F)."""
    return h_polynomial_of_faces(C.faces, C.dimension)


def _dual_setup(Gr: BranchingGreedoid, P: RootPolytope | None):
    if not dg.is_eulerian(Gr.graph):
        raise ValueError("h* methods need an Eulerian digraph")
    if P is None:
        P = dual_root_polytope(Gr.graph)
    return P, arborescence_bases(Gr.graph, Gr.root)


def lambda_from_hstar(hstar: Polynomial, d: int) -> Polynomial:
    """lambda(t) = t^(d+1) h*(1/t)."""
    return hstar.reflect(d + 1)


def greedoid_polynomial(Gr: BranchingGreedoid, method: str = "activity",
                        P: RootPolytope | None = None, order: Sequence[int] | None = None,
                        max_box: int = ehrhart.MAX_BOX) -> Polynomial:
    """lambda(t) = sum over arborescences of t^(external activity).

    ``P`` may supply a prebuilt dual root polytope (any TU representation);
    ``order`` only affects the semi-passivity route.
    """
    G = Gr.graph
    if G.m == 0:
        return Polynomial([1])
    if method == "activity":
        return Polynomial.from_histogram(external_activity(Gr, B) for B in Gr.bases())
    if method == "semiactivity":
        return Polynomial.from_histogram(external_activity(Gr, B, "semi") for B in Gr.bases())
    if method == "dual_complex":
        return h_polynomial(dual_complex(Gr))
    if method not in HSTAR_METHODS:
        raise ValueError(f"unknown method {method!r}; choose from {', '.join(METHODS)}")
    P, D = _dual_setup(Gr, P)
    d = dimension(P)
    if method == "hstar_ehrhart":
        h = ehrhart.hstar_from_ehrhart(P, max_box)
    elif method == "hstar_semipassivity":
        h = ehrhart.hstar_from_semipassivity(P, D, order)
    else:
        h = ehrhart.hstar_from_triangulation(P, D)
    return lambda_from_hstar(h, d)
