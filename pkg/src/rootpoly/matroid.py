"""Regular oriented matroids given by totally unimodular matrices.

Elements are the column labels (ints, by default 1..m).  The natural order of
the labels is the fixed element order; functions that depend on an order take
an optional ``order`` sequence listing the elements from smallest to largest.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple, Sequence

from . import digraph as dg
from .exact_arith import (
    DimensionError,
    IntegerMatrix,
    IntegrityError,
    ScaleCapError,
    as_matrix,
    independent_rows,
    inverse,
    pivot_standard_form,
    rank,
    solve,
)

CIRCUIT_CAP = 16


class SignedSubset(NamedTuple):
    positive: frozenset
    negative: frozenset

    @property
    def support(self) -> frozenset:
        return self.positive | self.negative

    def flipped(self) -> "SignedSubset":
        return SignedSubset(self.negative, self.positive)

    def canonical(self) -> "SignedSubset":
        """Global sign fixed so the smallest element is positive."""
        if not self.support or min(self.support) in self.positive:
            return self
        return self.flipped()

    def vector(self, labels: Sequence[int]) -> tuple[int, ...]:
        return tuple(1 if x in self.positive else -1 if x in self.negative else 0 for x in labels)


def signed(positive=(), negative=()) -> SignedSubset:
    return SignedSubset(frozenset(positive), frozenset(negative))


@dataclass(frozen=True)
class MatroidRep:
    """A full-row-rank matrix whose columns are labeled by matroid elements.

    ``tu`` records that total unimodularity holds by construction (incidence
    matrices, pivoted forms, duals) or was verified.
    """

    matrix: IntegerMatrix
    labels: tuple[int, ...]
    tu: bool = True
    _cache: dict = field(default_factory=dict, compare=False, hash=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(self.labels))
        if len(self.labels) != self.matrix.ncols:
            raise DimensionError("one label per column required")
        if len(set(self.labels)) != len(self.labels):
            raise ValueError("duplicate element labels")
        if rank(self.matrix) != self.matrix.nrows:
            raise DimensionError("representation must have full row rank")

    @property
    def rank(self) -> int:
        return self.matrix.nrows

    @property
    def m(self) -> int:
        return len(self.labels)

    @property
    def elements(self) -> tuple[int, ...]:
        return self.labels

    def index(self, e: int) -> int:
        try:
            return self._positions()[e]
        except KeyError:
            raise ValueError(f"unknown element {e}") from None

    def _positions(self) -> dict[int, int]:
        if "pos" not in self._cache:
            self._cache["pos"] = {x: i for i, x in enumerate(self.labels)}
        return self._cache["pos"]

    def column(self, e: int) -> tuple[int, ...]:
        return self.matrix.column(self.index(e))

    def submatrix(self, S) -> IntegerMatrix:
        return self.matrix.select_columns([self.index(e) for e in S])

    def __neg__(self) -> "MatroidRep":
        return MatroidRep(-self.matrix, self.labels, self.tu)


def matroid_from_matrix(M, labels: Sequence[int] | None = None, tu: bool = False) -> MatroidRep:
    """Wrap an arbitrary integer matrix, deleting dependent rows first."""
    M = as_matrix(M)
    M = M.select_rows(independent_rows(M))
    if labels is None:
        labels = range(1, M.ncols + 1)
    return MatroidRep(M, tuple(labels), tu)


def graphic_matroid(G: dg.Digraph, deleted_row: int | None = None) -> MatroidRep:
    """Incidence matrix of G with dependent rows removed.

    ``deleted_row`` (a vertex) picks which row to drop for a connected graph;
    otherwise rows are removed greedily in index order.
    """
    A = dg.incidence_matrix(G)
    if deleted_row is not None:
        if not dg.is_connected(G):
            raise ValueError("deleted_row only applies to connected graphs")
        A = A.select_rows([i for i in range(G.n) if i != deleted_row - 1])
    else:
        A = A.select_rows(independent_rows(A))
    return MatroidRep(A, tuple(G.edge_ids), True)


def _order_key(order):
    if order is None:
        return None
    pos = {x: i for i, x in enumerate(order)}
    return pos.__getitem__


# -- independence and bases -----------------------------------------------------

def is_independent(R: MatroidRep, S) -> bool:
    S = list(S)
    for e in S:
        R.index(e)
    if not S:
        return True
    return rank(R.submatrix(S)) == len(S)


def enumerate_bases(R: MatroidRep) -> list[frozenset]:
    if "bases" not in R._cache:
        from .exact_arith import determinant

        out = []
        for S in itertools.combinations(R.labels, R.rank):
            if determinant(R.submatrix(S)) != 0:
                out.append(frozenset(S))
        out.sort(key=sorted)
        R._cache["bases"] = out
    return list(R._cache["bases"])


def _basis_inverse(R: MatroidRep, B) -> tuple[tuple[int, ...], tuple]:
    """(sorted basis, inverse of its column submatrix)."""
    key = frozenset(B)
    cache = R._cache.setdefault("inv", {})
    if key not in cache:
        cols = tuple(sorted(key))
        if len(cols) != R.rank:
            raise ValueError(f"{sorted(key)} is not a basis")
        try:
            cache[key] = (cols, inverse(R.submatrix(cols)))
        except ZeroDivisionError:
            raise ValueError(f"{sorted(key)} is not a basis") from None
    return cache[key]


def basis_coordinates(R: MatroidRep, B, v: Sequence) -> dict[int, Fraction | int]:
    """Coefficients of v in the basis B (keyed by element)."""
    cols, inv = _basis_inverse(R, B)
    return {e: sum(a * x for a, x in zip(row, v)) for e, row in zip(cols, inv)}


def fundamental_circuit(R: MatroidRep, B, e: int) -> SignedSubset:
    """The signed circuit inside B + e, with e positive."""
    B = frozenset(B)
    if e in B:
        raise ValueError(f"element {e} is in the basis")
    coeffs = basis_coordinates(R, B, R.column(e))
    # a_e - sum_b x_b a_b = 0
    pos = {e} | {b for b, x in coeffs.items() if x < 0}
    neg = {b for b, x in coeffs.items() if x > 0}
    if R.tu and any(x not in (-1, 0, 1) for x in coeffs.values()):
        raise IntegrityError("fundamental circuit coefficient outside {-1,0,1}")
    return SignedSubset(frozenset(pos), frozenset(neg))


def cocircuit_functional(R: MatroidRep, B, k: int) -> tuple:
    """Linear functional vanishing on B - k with value 1 on a_k."""
    B = frozenset(B)
    if k not in B:
        raise ValueError(f"element {k} is not in the basis")
    cols, inv = _basis_inverse(R, B)
    return tuple(inv[cols.index(k)])


def functional_values(R: MatroidRep, h: Sequence) -> dict[int, Fraction | int]:
    return {e: sum(a * x for a, x in zip(h, R.column(e))) for e in R.labels}


def fundamental_cocircuit(R: MatroidRep, B, k: int) -> SignedSubset:
    """The signed cocircuit avoiding B - k, with k positive."""
    vals = functional_values(R, cocircuit_functional(R, B, k))
    if R.tu and any(v not in (-1, 0, 1) for v in vals.values()):
        raise IntegrityError("cocircuit functional value outside {-1,0,1}")
    return SignedSubset(frozenset(e for e, v in vals.items() if v > 0),
                        frozenset(e for e, v in vals.items() if v < 0))


def _check_scale(R: MatroidRep):
    if R.m > CIRCUIT_CAP:
        raise ScaleCapError(f"{R.m} elements exceeds circuit enumeration cap {CIRCUIT_CAP}")


def enumerate_circuits(R: MatroidRep) -> list[SignedSubset]:
    """All signed circuits (one sign per circuit, smallest element positive)."""
    if "circuits" not in R._cache:
        _check_scale(R)
        seen = set()
        for B in enumerate_bases(R):
            for e in R.labels:
                if e not in B:
                    seen.add(fundamental_circuit(R, B, e).canonical())
        R._cache["circuits"] = sorted(seen, key=lambda c: (sorted(c.support), sorted(c.positive)))
    return list(R._cache["circuits"])


def enumerate_cocircuits(R: MatroidRep) -> list[SignedSubset]:
    if "cocircuits" not in R._cache:
        _check_scale(R)
        seen = set()
        for B in enumerate_bases(R):
            for k in B:
                seen.add(fundamental_cocircuit(R, B, k).canonical())
        R._cache["cocircuits"] = sorted(seen, key=lambda c: (sorted(c.support), sorted(c.positive)))
    return list(R._cache["cocircuits"])


def dual(R: MatroidRep, column_order: Sequence[int] | None = None) -> MatroidRep:
    """Dual representation (-X^T | I) from the standard form (I | X).

    ``column_order`` (element labels) steers which columns become pivots;
    the result is mapped back onto the original labels.
    """
    idx_order = None if column_order is None else [R.index(e) for e in column_order]
    sf = pivot_standard_form(R.matrix, idx_order)
    r, m = R.rank, R.m
    X = sf.X
    k = m - r
    rows = []
    for i in range(k):
        permuted = [-X[j, i] for j in range(r)] + [int(i == j) for j in range(k)]
        row = [0] * m
        for pos, orig in enumerate(sf.columns):
            row[orig] = permuted[pos]
        rows.append(row)
    return MatroidRep(IntegerMatrix.from_rows(rows) if rows else IntegerMatrix(()), R.labels, True)


def orthogonal(S1: SignedSubset, S2: SignedSubset) -> bool:
    if not (S1.support & S2.support):
        return True
    same = (S1.positive & S2.positive) | (S1.negative & S2.negative)
    opposite = (S1.positive & S2.negative) | (S1.negative & S2.positive)
    return bool(same) and bool(opposite)


def is_eulerian_matroid(R: MatroidRep) -> bool:
    return all(len(c.positive) == len(c.negative) for c in enumerate_cocircuits(R))


def is_co_eulerian(R: MatroidRep) -> bool:
    return all(len(c.positive) == len(c.negative) for c in enumerate_circuits(R))


# -- kernel vectors -------------------------------------------------------------

def _apply(R: MatroidRep, lam: Sequence) -> tuple:
    return R.matrix.matvec(lam)


def decompose_zero_combination(R: MatroidRep, lam: Sequence) -> list[tuple[SignedSubset, Fraction]]:
    """Write a kernel vector as a positive combination of signed circuits.

    ``lam`` is indexed like ``R.labels``.  Each step subtracts a circuit
    supported inside the current support, scaled so one entry vanishes while
    no entry changes sign; the last circuit is therefore conformal to ``lam``.
    """
    if len(lam) != R.m:
        raise DimensionError("coefficient vector length differs from element count")
    rest = {e: Fraction(x) for e, x in zip(R.labels, lam)}
    if any(_apply(R, [rest[e] for e in R.labels])):
        raise ValueError("vector is not in the kernel")
    out = []
    while True:
        support = [e for e in R.labels if rest[e] != 0]
        if not support:
            return out
        basis = []
        for e in sorted(support):
            if is_independent(R, basis + [e]):
                basis.append(e)
        e = min(x for x in support if x not in basis)
        coeffs = solve(R.submatrix(basis), R.column(e)) if basis else ()
        circ = {e: Fraction(1)}
        for b, x in zip(basis, coeffs):
            if x:
                circ[b] = -x
        if not any(rest[i] * c > 0 for i, c in circ.items()):
            circ = {i: -c for i, c in circ.items()}
        nu = min(rest[i] / c for i, c in circ.items() if rest[i] * c > 0)
        for i, c in circ.items():
            rest[i] -= nu * c
        C = SignedSubset(frozenset(i for i, c in circ.items() if c > 0),
                         frozenset(i for i, c in circ.items() if c < 0))
        out.append((C, nu))


def conformal_circuit(R: MatroidRep, lam: Sequence) -> SignedSubset:
    if not any(lam):
        raise ValueError("zero vector has no conformal circuit")
    C = decompose_zero_combination(R, lam)[-1][0]
    sign = dict(zip(R.labels, lam))
    if any(sign[i] <= 0 for i in C.positive) or any(sign[i] >= 0 for i in C.negative):
        raise IntegrityError("final circuit is not conformal")
    return C


# -- semi-activities --------------------------------------------------------------

def internal_semiactive(R: MatroidRep, B, k: int, order=None) -> bool:
    """Largest element of the fundamental cocircuit C*(B, k) is parallel to k."""
    C = fundamental_cocircuit(R, B, k)
    return max(C.support, key=_order_key(order)) in C.positive


def external_semiactive_matroid(R: MatroidRep, B, e: int, order=None) -> bool:
    """Largest element of the fundamental circuit C(B, e) is parallel to e."""
    C = fundamental_circuit(R, B, e)
    return max(C.support, key=_order_key(order)) in C.positive


def internal_semipassivity(R: MatroidRep, B, order=None) -> int:
    return sum(not internal_semiactive(R, B, k, order) for k in B)


# -- text format ----------------------------------------------------------------

class MatrixFormatError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def parse_matrix(text: str) -> IntegerMatrix:
    """Parse ``matrix <rows> <cols>`` followed by whitespace-separated integer rows."""
    lines = [(i, ln.split("#", 1)[0].strip()) for i, ln in enumerate(text.splitlines(), 1)]
    lines = [(i, ln) for i, ln in lines if ln]
    if not lines:
        raise MatrixFormatError("empty input")
    lineno, header = lines[0]
    parts = header.split()
    if len(parts) != 3 or parts[0] != "matrix":
        raise MatrixFormatError("expected header 'matrix <rows> <cols>'", lineno)
    try:
        r, c = int(parts[1]), int(parts[2])
    except ValueError:
        raise MatrixFormatError("row/column counts must be integers", lineno) from None
    if r < 1 or c < 1:
        raise MatrixFormatError("matrix dimensions must be positive", lineno)
    body = lines[1:]
    if len(body) != r:
        raise MatrixFormatError(f"header announces {r} rows, found {len(body)}",
                                body[-1][0] if body else lineno)
    rows = []
    for lineno, ln in body:
        try:
            row = [int(x) for x in ln.split()]
        except ValueError:
            raise MatrixFormatError("entries must be integers", lineno) from None
        if len(row) != c:
            raise MatrixFormatError(f"expected {c} entries, found {len(row)}", lineno)
        rows.append(row)
    return IntegerMatrix.from_rows(rows)


def format_matrix(M: IntegerMatrix) -> str:
    return "\n".join([f"matrix {M.nrows} {M.ncols}"] + [" ".join(map(str, r)) for r in M.entries]) + "\n"
