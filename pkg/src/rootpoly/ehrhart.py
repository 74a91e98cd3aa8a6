"""Lattice points in dilates of root polytopes, and four routes to h*.

Counting scans a bounding box of t*Q_A restricted to its affine hull and
keeps the points lying in some dilated simplex on affinely independent
vertices.  The inner membership test runs on int64 arrays of scaled inverses
(adjugates up to sign), and the entry bound is asserted before any product.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, lcm
from typing import Sequence

import numpy as np

from . import matroid as om
from .exact_arith import (
    IntegerMatrix,
    IntegrityError,
    ScaleCapError,
    determinant,
    independent_rows,
    nullspace,
    rref,
)
from .polynomial import (
    Polynomial,
    complex_from_facets,
    ehrhart_from_hstar,
    h_polynomial_of_faces,
    hstar_from_h,
    interpolate,
)
from .polytope import (
    RootPolytope,
    check_simplices,
    count_visible_facets,
    dimension,
    visibility_point,
)

MAX_BOX = 10**7
_CHUNK = 1 << 18
_INT_BOUND = 1 << 40


def _lifted(P: RootPolytope) -> tuple[om.MatroidRep, list[int]]:
    """Columns (a_i, 1) with dependent rows removed, plus the kept row indices.

    Bases of the lift are the affinely independent vertex sets of full size,
    so their simplices cover Q_A whether or not it is co-Eulerian.
    """
    cache = P.rep._cache
    if "lift" not in cache:
        rows = [list(r) for r in P.rep.matrix.entries] + [[1] * P.rep.m]
        keep = independent_rows(rows)
        L = IntegerMatrix.from_rows([rows[i] for i in keep])
        cache["lift"] = (om.MatroidRep(L, P.rep.labels, tu=False), keep)
    return cache["lift"]


def _scaled_inverses(P: RootPolytope) -> list[np.ndarray]:
    """|det| * inverse of every lifted basis matrix, as int64 arrays."""
    cache = P.rep._cache
    if "scaled_inv" not in cache:
        L, _ = _lifted(P)
        out = []
        for B in om.enumerate_bases(L):
            cols, inv = om._basis_inverse(L, B)
            det = abs(determinant(L.submatrix(cols)))
            out.append(np.array([[int(x * det) for x in row] for row in inv], dtype=np.int64))
        cache["scaled_inv"] = out
    return cache["scaled_inv"]


def contains_in_dilate(P: RootPolytope, p: Sequence[int], t: int) -> bool:
    """p in t*Q_A: nonnegative coefficients on some affinely independent
    vertex set, summing to t."""
    if len(p) != P.ambient_dim:
        raise ValueError("point dimension differs from ambient dimension")
    L, keep = _lifted(P)
    full = list(p) + [t]
    v = [full[i] for i in keep]
    for B in om.enumerate_bases(L):
        lam = om.basis_coordinates(L, B, v)
        if any(x < 0 for x in lam.values()):
            continue
        coeffs = [lam.get(e, 0) for e in P.rep.labels]
        if sum(coeffs) == t and P.rep.matrix.matvec(coeffs) == tuple(p):
            return True
    return False


def _hull_equations(P: RootPolytope) -> list[tuple[tuple[int, ...], int]]:
    """Integer (c, c0) with c . a_i = c0 for every column a_i."""
    cols = P.rep.matrix.columns()
    K = [list(a) + [-1] for a in cols]
    eqs = []
    for v in nullspace(K):
        den = lcm(*(x.denominator for x in v))
        w = [int(x * den) for x in v]
        eqs.append((tuple(w[:-1]), w[-1]))
    return eqs


class _Scan:
    """Candidate lattice points of t*Q_A: a box with hull equations solved out."""

    def __init__(self, P: RootPolytope, t: int):
        n = P.ambient_dim
        cols = np.array(P.rep.matrix.columns(), dtype=np.int64).reshape(-1, n)
        self.lo = t * cols.min(axis=0)
        self.hi = t * cols.max(axis=0)
        eqs = _hull_equations(P)
        red, pivots = rref([list(c) + [c0 * t] for c, c0 in eqs]) if eqs else ([], [])
        self.pivots = pivots
        self.free = [j for j in range(n) if j not in pivots]
        self.rows = []
        for row, pc in zip(red, pivots):
            den = lcm(*(x.denominator for x in row))
            ints = [int(x * den) for x in row]
            # den * x_pc = rhs - sum_f ints[f] x_f
            self.rows.append((pc, den, ints[n], [ints[f] for f in self.free]))
        sizes = [int(self.hi[j] - self.lo[j] + 1) for j in self.free]
        self.sizes = sizes
        self.count = int(np.prod(sizes, dtype=object)) if sizes else 1
        self.n = n

    def chunks(self):
        total = self.count
        for start in range(0, total, _CHUNK):
            idx = np.arange(start, min(start + _CHUNK, total), dtype=np.int64)
            X = np.empty((len(idx), self.n), dtype=np.int64)
            if self.free:
                coords = np.unravel_index(idx, self.sizes)
                for j, c in zip(self.free, coords):
                    X[:, j] = c + self.lo[j]
            ok = np.ones(len(idx), dtype=bool)
            for pc, den, rhs, coeffs in self.rows:
                num = np.full(len(idx), rhs, dtype=np.int64)
                for f, a in zip(self.free, coeffs):
                    if a:
                        num -= a * X[:, f]
                ok &= num % den == 0
                X[:, pc] = num // den
                ok &= (X[:, pc] >= self.lo[pc]) & (X[:, pc] <= self.hi[pc])
            yield X[ok]


def count_lattice_points(P: RootPolytope, t: int, max_box: int | None = MAX_BOX) -> int:
    if t < 0:
        raise ValueError("dilation factor must be nonnegative")
    if t == 0:
        return 1
    scan = _Scan(P, t)
    if max_box is not None and scan.count > max_box:
        raise ScaleCapError(f"{scan.count} candidate points at t={t} exceeds cap {max_box}")
    _, keep = _lifted(P)
    inverses = _scaled_inverses(P)
    reach = max(1, t, int(max(np.abs(scan.lo).max(initial=0), np.abs(scan.hi).max(initial=0))))
    bound = max(int(np.abs(U).max()) for U in inverses) * len(keep) * reach
    if bound > _INT_BOUND:
        raise ScaleCapError("coordinates too large for the integer scan")
    total = 0
    for X in scan.chunks():
        # the hull equations already pin (p, t) to the span of the lifted columns
        Y = np.hstack([X, np.full((len(X), 1), t, dtype=np.int64)])[:, keep]
        inside = np.zeros(len(X), dtype=bool)
        for U in inverses:
            inside |= ((Y @ U.T) >= 0).all(axis=1)
        total += int(inside.sum())
    return total


def ehrhart_polynomial(P: RootPolytope, max_box: int = MAX_BOX) -> Polynomial:
    """Interpolate counts at t = 0..d, then confirm at t = d+1, d+2.

    The cap applies to the candidate box of d*Q_A; once that passes, the two
    confirming dilates are counted regardless.
    """
    cache = P.rep._cache
    if "ehrhart" in cache:
        return cache["ehrhart"]
    d = dimension(P)
    box = _Scan(P, d).count if d else 1
    if box > max_box:
        raise ScaleCapError(f"{box} candidate points at t={d} exceeds cap {max_box}")
    pts = [(t, count_lattice_points(P, t, None)) for t in range(d + 1)]
    eps = interpolate(pts)
    for t in (d + 1, d + 2):
        got = count_lattice_points(P, t, None)
        if eps(t) != got:
            raise IntegrityError(f"Ehrhart interpolation predicts {eps(t)} at t={t}, counted {got}")
    cache["ehrhart"] = eps
    return eps


def hstar_from_ehrhart(P: RootPolytope, max_box: int = MAX_BOX) -> Polynomial:
    """Coordinates of the Ehrhart polynomial in the basis binom(t+d-k, d)."""
    d = dimension(P)
    eps = ehrhart_polynomial(P, max_box)
    a: list[Fraction] = []
    for t in range(d + 1):
        # binom(t+d-k, d) vanishes for k > t, and is 1 for k = t
        a.append(eps(t) - sum(a[k] * comb(t + d - k, d) for k in range(t)))
    h = Polynomial(a)
    if ehrhart_from_hstar(h, d) != eps:
        raise IntegrityError("binomial-basis expansion does not reproduce the Ehrhart polynomial")
    if not h.is_nonnegative_integral() or h[0] != 1:
        raise IntegrityError(f"h* = {h} is not a nonnegative integer vector with h*_0 = 1")
    return h


def hstar_from_triangulation(P: RootPolytope, D: Sequence, check: bool = True) -> Polynomial:
    """h* from the h-polynomial of the simplicial complex spanned by D."""
    if check:
        failures = check_simplices(P, D)
        if failures:
            raise IntegrityError(f"not a unimodular triangulation: {failures[0][:1]} {failures[0][1:]}")
    d = dimension(P)
    faces = complex_from_facets(D)
    h = h_polynomial_of_faces(faces, d)
    if h[0] != 0:
        raise IntegrityError("h(0) != 0; complex is not a ball or sphere of the expected dimension")
    return hstar_from_h(h, d)


def hstar_from_semipassivity(P: RootPolytope, D: Sequence, order: Sequence[int] | None = None) -> Polynomial:
    """Histogram of internal semi-passivity over a dissecting set of bases."""
    return Polynomial.from_histogram(om.internal_semipassivity(P.rep, B, order) for B in D)


def hstar_from_visibility(P: RootPolytope, D: Sequence, order: Sequence[int] | None = None) -> Polynomial:
    """Histogram of facets visible from the weighted point q."""
    q = visibility_point(P, order)
    return Polynomial.from_histogram(count_visible_facets(P, B, q) for B in D)


def normalized_volume(P: RootPolytope, max_box: int = MAX_BOX) -> int:
    return int(sum(hstar_from_ehrhart(P, max_box).coeffs))
