"""
Linear Algebra Module
Gaussian elimination, rank and solving over GF(2^w)
"""
from dataclasses import dataclass, field as dataclass_field
from typing import List, Optional, Sequence, Tuple

import numpy as np

from ..errors import FieldDomainError, RankDeficiencyError
from .field import FieldContext, Symbol


@dataclass(eq=False)
class CoeffMatrix:
    """A rows x cols grid of Symbols over one FieldContext"""
    field: FieldContext
    entries: np.ndarray

    def __post_init__(self):
        self.entries = np.array(self.entries, dtype=np.int64, ndmin=2)
        if self.entries.ndim != 2:
            raise FieldDomainError("Coefficient matrix must be two-dimensional")
        if self.entries.size and (self.entries.min() < 0 or self.entries.max() >= self.field.order):
            raise FieldDomainError(f"Matrix entries must lie in GF(2^{self.field.w})")

    @property
    def rows(self) -> int:
        return self.entries.shape[0]

    @property
    def cols(self) -> int:
        return self.entries.shape[1]

    @classmethod
    def from_rows(
        cls, field: FieldContext, rows: Sequence[Sequence[Symbol]], cols: Optional[int] = None
    ) -> "CoeffMatrix":
        if len(rows) == 0:
            return cls(field, np.zeros((0, cols or 0), dtype=np.int64))
        return cls(field, np.array(rows, dtype=np.int64))

    @classmethod
    def identity(cls, field: FieldContext, n: int) -> "CoeffMatrix":
        return cls(field, np.eye(n, dtype=np.int64))

    @classmethod
    def vandermonde(cls, field: FieldContext, points: Sequence[Symbol], powers: int) -> "CoeffMatrix":
        """Rows gamma^0 .. gamma^(powers-1) evaluated at each point"""
        grid = [[field.pow(point, row) for point in points] for row in range(powers)]
        return cls(field, np.array(grid, dtype=np.int64).reshape(powers, len(points)))

    def tolist(self) -> List[List[Symbol]]:
        return self.entries.tolist()


@dataclass
class Echelon:
    """Row-echelon form; each row is normalised to 1 at its pivot column"""
    rows: np.ndarray
    pivots: List[int]
    extra: Optional[np.ndarray] = dataclass_field(default=None)

    @property
    def rank(self) -> int:
        return len(self.pivots)


def _as_array(values) -> np.ndarray:
    return np.array(values, dtype=np.int64, ndmin=2)


def matmul(field: FieldContext, a, b) -> np.ndarray:
    """Matrix product over the field"""
    a = _as_array(a)
    b = _as_array(b)
    if a.shape[1] != b.shape[0]:
        raise FieldDomainError(f"Cannot multiply {a.shape} by {b.shape}")
    out = np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    for k in range(a.shape[1]):
        out ^= field.multiply(a[:, k:k + 1], b[k:k + 1, :])
    return out


def row_echelon(field: FieldContext, matrix, extra=None) -> Echelon:
    """
    Forward elimination over GF(2^w).

    Args:
        field: arithmetic context
        matrix: rows x cols coefficients
        extra: optional rows x k block carried through the same row operations

    Returns:
        Echelon form of the nonzero rows; pivots are chosen as the first nonzero
        entry of each column in row order.
    """
    a = _as_array(matrix).copy()
    rows, cols = a.shape
    b = None
    if extra is not None:
        b = np.array(extra, dtype=np.int64)
        if b.ndim == 1:
            b = b.reshape(rows, 1)
        b = b.copy()
    pivots: List[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        candidates = np.nonzero(a[r:, c])[0]
        if candidates.size == 0:
            continue
        p = r + int(candidates[0])
        if p != r:
            a[[r, p]] = a[[p, r]]
            if b is not None:
                b[[r, p]] = b[[p, r]]
        scale = field.inv(int(a[r, c]))
        a[r] = field.multiply(scale, a[r])
        if b is not None:
            b[r] = field.multiply(scale, b[r])
        below = r + 1 + np.nonzero(a[r + 1:, c])[0]
        if below.size:
            factors = a[below, c][:, None]
            a[below] ^= field.multiply(factors, a[r][None, :])
            if b is not None:
                b[below] ^= field.multiply(factors, b[r][None, :])
        pivots.append(c)
        r += 1
    return Echelon(rows=a[:r], pivots=pivots, extra=None if b is None else b[:r])


def reduce_vector(field: FieldContext, echelon: Echelon, vector) -> Tuple[np.ndarray, Optional[np.ndarray]]:
    """
    Eliminate vector against an echelon basis.

    Returns the residual (all zero iff vector is in the row span) and the
    matching combination of the echelon's extra block.
    """
    residual = np.array(vector, dtype=np.int64).copy()
    combined = None
    if echelon.extra is not None:
        combined = np.zeros(echelon.extra.shape[1], dtype=np.int64)
    for row_index, pivot in enumerate(echelon.pivots):
        factor = int(residual[pivot])
        if factor == 0:
            continue
        residual ^= field.multiply(factor, echelon.rows[row_index])
        if combined is not None:
            combined ^= field.multiply(factor, echelon.extra[row_index])
    return residual, combined


def rank(m: CoeffMatrix) -> int:
    """Row rank over GF(2^w)"""
    if m.rows == 0 or m.cols == 0:
        return 0
    return row_echelon(m.field, m.entries).rank


def solve(m: CoeffMatrix, rhs) -> List[List[Symbol]]:
    """
    Solve m . x = rhs by Gauss-Jordan elimination.

    Args:
        m: square, nonsingular coefficient matrix
        rhs: one Symbol vector per equation (a page payload, a column, ...)

    Returns:
        One Symbol vector per unknown
    """
    if m.rows != m.cols:
        raise FieldDomainError(f"solve needs a square matrix, got {m.rows}x{m.cols}")
    n = m.rows
    rhs_array = np.array(rhs, dtype=np.int64)
    if rhs_array.ndim == 1:
        rhs_array = rhs_array.reshape(n, 1)
    if rhs_array.shape[0] != n:
        raise FieldDomainError(f"Expected {n} right-hand sides, got {rhs_array.shape[0]}")
    echelon = row_echelon(m.field, m.entries, rhs_array)
    if echelon.rank < n:
        raise RankDeficiencyError(f"Matrix is singular (rank {echelon.rank} < {n})", rank=echelon.rank)

    a = echelon.rows
    b = echelon.extra
    for idx in reversed(range(n)):
        c = echelon.pivots[idx]
        above = np.nonzero(a[:idx, c])[0]
        if above.size:
            factors = a[above, c][:, None]
            a[above] ^= m.field.multiply(factors, a[idx][None, :])
            b[above] ^= m.field.multiply(factors, b[idx][None, :])
    return b.tolist()
