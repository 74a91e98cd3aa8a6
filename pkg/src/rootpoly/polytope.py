"""Root polytopes Q_A = conv(columns of A) and their basis simplices.

For a co-Eulerian representation every basis B spans a full-dimensional
unimodular simplex Delta_B.  The arborescence complements of an Eulerian
digraph triangulate the root polytope of the dual of its graphic matroid;
this module certifies that combinatorially and walks points into the
triangulation.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Sequence

from . import digraph as dg
from . import matroid as om
from .exact_arith import IntegrityError, determinant, rank


class NotContainedError(ValueError):
    pass


class DegeneratePositionError(ValueError):
    pass


@dataclass(frozen=True)
class RootPolytope:
    rep: om.MatroidRep

    @property
    def ambient_dim(self) -> int:
        return self.rep.matrix.nrows

    def vertex(self, e: int) -> tuple[int, ...]:
        return self.rep.column(e)

    def vertices(self) -> list[tuple[int, ...]]:
        """Distinct column vectors."""
        return sorted(set(self.rep.matrix.columns()))


def dual_root_polytope(G: dg.Digraph, deleted_row: int | None = None,
                       column_order: Sequence[int] | None = None) -> RootPolytope:
    """Root polytope of the dual of the graphic matroid of G."""
    return RootPolytope(om.dual(om.graphic_matroid(G, deleted_row), column_order))


def affine_rank(points: Sequence[Sequence[int]]) -> int:
    if not points:
        return 0
    return rank([list(p) + [1] for p in points])


def dimension(P: RootPolytope, check: bool = True) -> int:
    """Affine dimension of Q_A, cross-checked against the co-Eulerian rule."""
    d = affine_rank(P.rep.matrix.columns()) - 1
    if check and P.rep.m <= om.CIRCUIT_CAP:
        expected = P.rep.rank - 1 if om.is_co_eulerian(P.rep) else P.rep.rank
        if d != expected:
            raise IntegrityError(f"affine dimension {d} but rank rule predicts {expected}")
    return d


def _minor_gcd(vectors: Sequence[Sequence[int]]) -> int:
    """gcd of the maximal minors of the matrix with the given columns."""
    k = len(vectors)
    if k == 0:
        return 1
    n = len(vectors[0])
    g = 0
    for rows in itertools.combinations(range(n), k):
        g = math.gcd(g, determinant([[v[i] for v in vectors] for i in rows]))
        if g == 1:
            return 1
    return g


def simplex_unimodular(P: RootPolytope, B) -> bool:
    """Delta_B is a lattice simplex whose edge vectors span all lattice points
    of their linear span, and det A_B = +-1."""
    B = sorted(B)
    if len(B) != P.rep.rank:
        raise ValueError(f"{B} is not a basis")
    det = determinant(P.rep.submatrix(B))
    if det == 0:
        raise ValueError(f"{B} is not a basis")
    if abs(det) != 1:
        return False
    cols = [P.vertex(e) for e in B]
    if affine_rank(cols) != len(cols):
        return False
    base = cols[-1]
    edges = [[a - b for a, b in zip(c, base)] for c in cols[:-1]]
    return _minor_gcd(edges) == 1


def common_face_obstruction(P: RootPolytope, B1, B2) -> om.SignedSubset | None:
    """A signed circuit C with C+ in B1 and C- in B2, if one exists."""
    B1, B2 = frozenset(B1), frozenset(B2)
    for C in om.enumerate_circuits(P.rep):
        for S in (C, C.flipped()):
            if S.positive <= B1 and S.negative <= B2:
                return S
    return None


def meet_in_common_face(P: RootPolytope, B1, B2) -> bool:
    return common_face_obstruction(P, B1, B2) is None


def arborescence_bases(G: dg.Digraph, root: int) -> list[frozenset]:
    """Complements of the spanning arborescences rooted at ``root``."""
    if not dg.is_eulerian(G):
        raise ValueError("digraph is not Eulerian")
    E = frozenset(G.edge_ids)
    return [E - F for F in dg.enumerate_arborescences(G, root)]


@dataclass
class TriangulationReport:
    simplices: int
    volume: int | None
    failures: list[tuple] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def witness(self) -> str:
        return "; ".join(_describe(f) for f in self.failures)


def _describe(failure: tuple) -> str:
    kind = failure[0]
    if kind == "pair":
        _, B1, B2, C = failure
        return (f"bases {sorted(B1)} and {sorted(B2)} do not meet in a common face "
                f"(circuit +{sorted(C.positive)} -{sorted(C.negative)})")
    if kind == "volume":
        return f"{failure[1]} simplices but normalized volume {failure[2]}"
    return f"basis {sorted(failure[1])}: {kind}"


def check_simplices(P: RootPolytope, D: Sequence) -> list[tuple]:
    """Full-dimensionality, unimodularity and pairwise common faces."""
    failures = []
    d = dimension(P)
    D = [frozenset(B) for B in D]
    for B in D:
        if len(B) != P.rep.rank or not om.is_independent(P.rep, B):
            failures.append(("not a basis", B))
            continue
        if affine_rank([P.vertex(e) for e in B]) - 1 != d:
            failures.append(("not full-dimensional", B))
        if not simplex_unimodular(P, B):
            failures.append(("not unimodular", B))
    for i in range(len(D)):
        for j in range(i + 1, len(D)):
            C = common_face_obstruction(P, D[i], D[j])
            if C is not None:
                failures.append(("pair", D[i], D[j], C))
    return failures


def verify_triangulation(P: RootPolytope, D: Sequence, volume: int | None = None) -> TriangulationReport:
    """Certify that {Delta_B : B in D} triangulates Q_A.

    Unimodular full-dimensional simplices pairwise meeting in common faces are
    interior-disjoint; if there are as many as the normalized volume of Q_A
    they cover it.  ``volume`` defaults to sum(h*) from lattice-point counting.
    """
    if volume is None:
        from .ehrhart import hstar_from_ehrhart

        volume = int(sum(hstar_from_ehrhart(P).coeffs))
    failures = check_simplices(P, D)
    if len(D) != volume:
        failures.append(("volume", len(D), volume))
    return TriangulationReport(len(D), volume, failures)


# -- point location ------------------------------------------------------------

def simplex_coordinates(P: RootPolytope, B, p: Sequence) -> dict[int, Fraction]:
    return {e: Fraction(x) for e, x in om.basis_coordinates(P.rep, B, p).items()}


def in_simplex(P: RootPolytope, B, p: Sequence) -> bool:
    lam = simplex_coordinates(P, B, p)
    if P.rep.matrix.matvec([lam.get(e, 0) for e in P.rep.labels]) != tuple(Fraction(x) for x in p):
        return False
    return all(x >= 0 for x in lam.values()) and sum(lam.values()) == 1


def containing_basis(P: RootPolytope, p: Sequence) -> frozenset:
    """First basis (lexicographic) whose simplex contains p."""
    for B in om.enumerate_bases(P.rep):
        if in_simplex(P, B, p):
            return B
    raise NotContainedError(f"point {tuple(map(str, p))} is not in the root polytope")


@dataclass(frozen=True)
class WalkStep:
    tree: frozenset
    basis: frozenset
    coefficients: dict


def walk_to_arborescence(P: RootPolytope, G: dg.Digraph, root: int, p: Sequence,
                         start=None) -> Iterator[WalkStep]:
    """Move p's containing simplex down the tree order until E - B is an arborescence.

    Each step takes the first tree edge e of List(T) pointing toward the root,
    shifts the coefficients along the dual circuit C*(T, e) by the smallest
    coefficient on its negative side and exchanges e for a zeroed element f
    (smallest label on ties).
    """
    E = frozenset(G.edge_ids)
    B = frozenset(start) if start is not None else containing_basis(P, p)
    lam = simplex_coordinates(P, B, p)
    if any(x < 0 for x in lam.values()) or sum(lam.values()) != 1:
        raise NotContainedError("starting simplex does not contain the point")
    while True:
        T = E - B
        yield WalkStep(T, B, dict(lam))
        toward = [x.edge for x in dg.burning_edge_list(G, root, T) if x.in_tree and x.toward_root]
        if not toward:
            return
        e = toward[0]
        C = om.fundamental_circuit(P.rep, B, e)
        eps = min(lam[i] for i in C.negative)
        new = dict(lam)
        new[e] = Fraction(0)
        for i in C.positive:
            new[i] = new.get(i, Fraction(0)) + eps
        for i in C.negative:
            new[i] -= eps
        f = min(i for i in C.negative if new[i] == 0)
        del new[f]
        B = B - {f} | {e}
        lam = new


def locate_point(P: RootPolytope, G: dg.Digraph, root: int, p: Sequence) -> frozenset:
    """An arborescence-complement basis whose simplex contains p."""
    step = None
    for step in walk_to_arborescence(P, G, root, p):
        pass
    return step.basis


# -- visibility -----------------------------------------------------------------

def visibility_point(P: RootPolytope, order: Sequence[int] | None = None) -> tuple[Fraction, ...]:
    """q = sum_i 2^i a_i / sum_j 2^j, with i the 1-based position in ``order``."""
    order = list(P.rep.labels) if order is None else list(order)
    weights = {e: 2 ** (i + 1) for i, e in enumerate(order)}
    total = sum(weights.values())
    return tuple(Fraction(sum(weights[e] * P.vertex(e)[r] for e in order), total)
                 for r in range(P.ambient_dim))


def facet_value(P: RootPolytope, B, k: int, q: Sequence) -> Fraction:
    """Facet functional of Delta_{B-k} (positive on a_k) evaluated at q."""
    h = om.cocircuit_functional(P.rep, B, k)
    return sum((Fraction(a) * x for a, x in zip(h, q)), Fraction(0))


def count_visible_facets(P: RootPolytope, B, q: Sequence) -> int:
    visible = 0
    for k in B:
        v = facet_value(P, B, k, q)
        if v == 0:
            raise DegeneratePositionError(f"q lies on the facet hyperplane of {sorted(set(B) - {k})}")
        visible += v < 0
    return visible


def reflected(P: RootPolytope) -> RootPolytope:
    return RootPolytope(-P.rep)


def mutated_bases(P: RootPolytope, D: Sequence, kind: str) -> list[frozenset] | None:
    """Break a triangulation on purpose.

    "drop" removes the last basis.  "swap" replaces one basis by an outside
    basis that conflicts with a remaining one (parallel columns can make a
    naive swap land on the very same simplex).  None if no such swap exists.
    """
    D = [frozenset(B) for B in D]
    if kind == "drop":
        return D[:-1]
    if kind != "swap":
        raise ValueError(f"unknown mutation {kind!r}")
    if len(D) < 2:
        return None
    present = set(D)
    for B in om.enumerate_bases(P.rep):
        if B in present:
            continue
        for j, other in enumerate(D):
            if common_face_obstruction(P, B, other) is not None:
                i = 1 if j == 0 else 0
                return D[:i] + [B] + D[i + 1:]
    return None
