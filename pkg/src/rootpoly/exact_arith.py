"""Exact integer / rational linear algebra.

Everything here works on Python ints and ``fractions.Fraction``; there is no
floating point anywhere.  Matrices are small (desk scale), so plain nested
tuples are used instead of an array library.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Rational = Fraction
RationalVector = tuple  # tuple[Fraction | int, ...]


class DimensionError(ValueError):
    pass


class IntegrityError(RuntimeError):
    """An internal consistency check failed; signals a bug upstream."""


class ScaleCapError(RuntimeError):
    """Requested computation exceeds the desk-scale cap."""


@dataclass(frozen=True)
class IntegerMatrix:
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.entries)
        if rows and len({len(r) for r in rows}) != 1:
            raise DimensionError("ragged matrix")
        object.__setattr__(self, "entries", rows)

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> "IntegerMatrix":
        return cls(tuple(tuple(r) for r in rows))

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence[int]], nrows: int | None = None) -> "IntegerMatrix":
        if not cols:
            return cls(tuple(() for _ in range(nrows or 0)))
        return cls(tuple(zip(*cols)))

    @classmethod
    def identity(cls, n: int) -> "IntegerMatrix":
        return cls(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @property
    def nrows(self) -> int:
        return len(self.entries)

    @property
    def ncols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self.entries)

    def columns(self) -> list[tuple[int, ...]]:
        return [self.column(j) for j in range(self.ncols)]

    def select_columns(self, cols: Sequence[int]) -> "IntegerMatrix":
        return IntegerMatrix(tuple(tuple(row[j] for j in cols) for row in self.entries))

    def select_rows(self, rows: Sequence[int]) -> "IntegerMatrix":
        return IntegerMatrix(tuple(self.entries[i] for i in rows))

    def transpose(self) -> "IntegerMatrix":
        return IntegerMatrix(tuple(zip(*self.entries)))

    def __neg__(self) -> "IntegerMatrix":
        return IntegerMatrix(tuple(tuple(-x for x in row) for row in self.entries))

    def matvec(self, v: Sequence) -> tuple:
        if len(v) != self.ncols:
            raise DimensionError(f"vector length {len(v)} != {self.ncols} columns")
        return tuple(sum(a * x for a, x in zip(row, v)) for row in self.entries)

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.entries]


def as_matrix(M) -> IntegerMatrix:
    return M if isinstance(M, IntegerMatrix) else IntegerMatrix.from_rows(M)


def determinant(M) -> int:
    """Bareiss fraction-free elimination."""
    M = as_matrix(M)
    n = M.nrows
    if M.ncols != n:
        raise DimensionError(f"determinant of non-square {M.shape} matrix")
    if n == 0:
        return 1
    a = [list(row) for row in M.entries]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def _rref(rows: list[list[Fraction]], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    rows = [list(r) for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        if r == len(rows):
            break
        p = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        pv = rows[r][c]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return rows, pivots


def rref(M) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over Q and the pivot columns."""
    M = as_matrix(M) if not isinstance(M, list) else M
    if isinstance(M, IntegerMatrix):
        rows = [[Fraction(x) for x in row] for row in M.entries]
        ncols = M.ncols
    else:
        rows = [[Fraction(x) for x in row] for row in M]
        ncols = len(M[0]) if M else 0
    return _rref(rows, ncols)


def rank(M) -> int:
    if isinstance(M, IntegerMatrix) and (M.nrows == 0 or M.ncols == 0):
        return 0
    return len(rref(M)[1])


def solve(M, b: Sequence) -> RationalVector | None:
    """Some x with Mx = b, or None when the system is inconsistent.

    Free variables are set to zero, so on independent columns the unique
    solution is returned.
    """
    M = as_matrix(M)
    if len(b) != M.nrows:
        raise DimensionError(f"rhs length {len(b)} != {M.nrows} rows")
    n = M.ncols
    aug = [[Fraction(x) for x in row] + [Fraction(bi)] for row, bi in zip(M.entries, b)]
    red, pivots = _rref(aug, n + 1)
    if n in pivots:
        return None
    x = [Fraction(0)] * n
    for row, c in zip(red, pivots):
        x[c] = row[n]
    return tuple(x)


def nullspace(M) -> list[RationalVector]:
    """A basis of {x : Mx = 0} over Q."""
    M = as_matrix(M)
    n = M.ncols
    red, pivots = rref(M)
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * n
        x[f] = Fraction(1)
        for row, c in zip(red, pivots):
            x[c] = -row[f]
        basis.append(tuple(x))
    return basis


def inverse(M) -> tuple[tuple, ...]:
    """Exact inverse; entries are ints when the inverse is integral."""
    M = as_matrix(M)
    n = M.nrows
    if M.ncols != n:
        raise DimensionError("inverse of non-square matrix")
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(M.entries)]
    red, pivots = _rref(aug, 2 * n)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("singular matrix")
    inv = [row[n:] for row in red]
    if all(x.denominator == 1 for row in inv for x in row):
        return tuple(tuple(int(x) for x in row) for row in inv)
    return tuple(tuple(row) for row in inv)


def independent_rows(M) -> list[int]:
    """Row indices left after deleting rows greedily in index order.

    A row is deleted when the rank of the remaining rows is unchanged.
    """
    M = as_matrix(M)
    keep = list(range(M.nrows))
    target = rank(M)
    for i in range(M.nrows):
        trial = [k for k in keep if k != i]
        if len(trial) >= target and rank(M.select_rows(trial)) == target:
            keep = trial
    return keep


@dataclass(frozen=True)
class StandardForm:
    matrix: IntegerMatrix       # (I_r | X), columns in `columns` order
    columns: tuple[int, ...]    # original column index of each output column
    transform: IntegerMatrix    # U with U @ M[:, columns] == matrix

    @property
    def X(self) -> IntegerMatrix:
        r = self.matrix.nrows
        return IntegerMatrix(tuple(row[r:] for row in self.matrix.entries))


def pivot_standard_form(M, column_order: Sequence[int] | None = None) -> StandardForm:
    """Bring a full-row-rank matrix to (I_r | X) by pivoting on +-1 entries.

    Pivot columns are chosen greedily along ``column_order`` (default: index
    order).  Row operations leave the kernel, hence the signed circuits, intact.
    """
    M = as_matrix(M)
    r, m = M.shape
    if rank(M) != r:
        raise DimensionError("pivot_standard_form needs full row rank")
    order = list(range(m)) if column_order is None else list(column_order)
    if sorted(order) != list(range(m)):
        raise ValueError("column_order must be a permutation of column indices")
    a = [list(row) for row in M.entries]
    u = [[int(i == j) for j in range(r)] for i in range(r)]
    pivot_cols = []
    done = set()
    for c in order:
        if len(pivot_cols) == r:
            break
        rows = [i for i in range(r) if i not in done and a[i][c] != 0]
        if not rows:
            continue
        p = next((i for i in rows if abs(a[i][c]) == 1), None)
        if p is None:
            raise IntegrityError(f"no +-1 pivot in column {c}; matrix is not totally unimodular")
        s = a[p][c]
        if s == -1:
            a[p] = [-x for x in a[p]]
            u[p] = [-x for x in u[p]]
        for i in range(r):
            if i != p and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[p])]
                u[i] = [x - f * y for x, y in zip(u[i], u[p])]
        done.add(p)
        pivot_cols.append((p, c))
    if len(pivot_cols) != r:
        raise IntegrityError("pivoting did not reach full rank")
    pivot_cols.sort()
    row_perm = [p for p, _ in pivot_cols]
    basis_cols = [c for _, c in pivot_cols]
    rest = [c for c in order if c not in basis_cols]
    cols = basis_cols + rest
    out = IntegerMatrix(tuple(tuple(a[p][c] for c in cols) for p in row_perm))
    U = IntegerMatrix(tuple(tuple(u[p]) for p in row_perm))
    return StandardForm(out, tuple(cols), U)


def is_totally_unimodular(M, size_cap: int = 8) -> bool:
    """Exhaustive check of every square subdeterminant."""
    M = as_matrix(M)
    r, c = M.shape
    if min(r, c) > size_cap:
        raise ScaleCapError(f"min dimension {min(r, c)} exceeds TU cap {size_cap}")
    if any(x not in (-1, 0, 1) for row in M.entries for x in row):
        return False
    for k in range(2, min(r, c) + 1):
        for rows in itertools.combinations(range(r), k):
            sub = M.select_rows(rows)
            for cols in itertools.combinations(range(c), k):
                if determinant(sub.select_columns(cols)) not in (-1, 0, 1):
                    return False
    return True
