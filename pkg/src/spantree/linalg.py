"""Exact rational matrices, fraction-free determinants and linear solves.

Scalars are :class:`fractions.Fraction`, which is always stored in lowest
terms with a positive denominator.  Elimination is done over Python
integers (Bareiss), after clearing denominators row by row, so no
intermediate rational ever needs a gcd.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

Rational = Fraction


class DimensionError(ValueError):
    """Matrix or vector shapes do not fit the requested operation."""


class SingularMatrixError(ArithmeticError):
    """The system matrix is singular."""


def as_rational(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floats are not accepted as exact values; use int, str or Fraction")
    return Fraction(x)


@dataclass(frozen=True)
class ExactMatrix:
    rows: int
    cols: int
    entries: tuple[Fraction, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise DimensionError("negative dimension")
        if len(self.entries) != self.rows * self.cols:
            raise DimensionError(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} entries, "
                f"got {len(self.entries)}"
            )
        object.__setattr__(self, "entries", tuple(as_rational(x) for x in self.entries))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> ExactMatrix:
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise DimensionError("ragged rows")
        return cls(len(rows), cols, tuple(x for r in rows for x in r))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> ExactMatrix:
        return cls(rows, cols, (Fraction(0),) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> ExactMatrix:
        return cls.from_rows([[int(i == j) for j in range(n)] for i in range(n)], n)

    @classmethod
    def constant_diagonal(cls, n: int, diag, off) -> ExactMatrix:
        """n x n matrix with ``diag`` on the diagonal and ``off`` elsewhere."""
        return cls.from_rows([[diag if i == j else off for j in range(n)] for i in range(n)], n)

    @classmethod
    def from_blocks(cls, a: ExactMatrix, b: ExactMatrix, c: ExactMatrix, d: ExactMatrix) -> ExactMatrix:
        """Assemble ``[[a, b], [c, d]]``."""
        if a.rows != b.rows or c.rows != d.rows or a.cols != c.cols or b.cols != d.cols:
            raise DimensionError("blocks are not conformal")
        top = [ra + rb for ra, rb in zip(a.to_rows(), b.to_rows())]
        bottom = [rc + rd for rc, rd in zip(c.to_rows(), d.to_rows())]
        return cls.from_rows(top + bottom, a.cols + b.cols)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(ij)
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> list[Fraction]:
        return list(self.entries[i * self.cols:(i + 1) * self.cols])

    def to_rows(self) -> list[list[Fraction]]:
        return [self.row(i) for i in range(self.rows)]

    def transpose(self) -> ExactMatrix:
        return ExactMatrix.from_rows([list(c) for c in zip(*self.to_rows())], self.rows)

    def delete(self, row: int, col: int) -> ExactMatrix:
        """Submatrix with one row and one column removed."""
        return ExactMatrix.from_rows(
            [[x for j, x in enumerate(r) if j != col] for i, r in enumerate(self.to_rows()) if i != row],
            self.cols - 1,
        )

    def __add__(self, other: ExactMatrix) -> ExactMatrix:
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionError("shape mismatch in addition")
        return ExactMatrix(self.rows, self.cols, tuple(x + y for x, y in zip(self.entries, other.entries)))

    def __sub__(self, other: ExactMatrix) -> ExactMatrix:
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionError("shape mismatch in subtraction")
        return ExactMatrix(self.rows, self.cols, tuple(x - y for x, y in zip(self.entries, other.entries)))

    def scale(self, k) -> ExactMatrix:
        k = as_rational(k)
        return ExactMatrix(self.rows, self.cols, tuple(k * x for x in self.entries))

    def __matmul__(self, other):
        if isinstance(other, ExactMatrix):
            if self.cols != other.rows:
                raise DimensionError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
            cols = other.transpose().to_rows()
            return ExactMatrix.from_rows(
                [[sum((x * y for x, y in zip(r, c)), Fraction(0)) for c in cols] for r in self.to_rows()],
                other.cols,
            )
        vec = [as_rational(x) for x in other]
        if len(vec) != self.cols:
            raise DimensionError("vector length does not match matrix")
        return [sum((x * y for x, y in zip(r, vec)), Fraction(0)) for r in self.to_rows()]


def _integer_rows(rows: Iterable[Sequence[Fraction]]) -> tuple[list[list[int]], int]:
    """Scale each row to integers; returns the rows and the product of the scale factors."""
    out = []
    total = 1
    for r in rows:
        f = lcm(*(x.denominator for x in r)) if r else 1
        out.append([x.numerator * (f // x.denominator) for x in r])
        total *= f
    return out, total


def bareiss_det(a: list[list[int]]) -> int:
    """Determinant of a square integer matrix; ``a`` is overwritten."""
    n = len(a)
    if n == 0:
        return 1
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
        rowk = a[k]
        pivot = rowk[k]
        tail = rowk[k + 1:]
        for i in range(k + 1, n):
            ri = a[i]
            aik = ri[k]
            if aik == 0:
                if pivot != prev:
                    ri[k + 1:] = [pivot * x // prev for x in ri[k + 1:]]
            else:
                ri[k + 1:] = [(pivot * x - aik * y) // prev for x, y in zip(ri[k + 1:], tail)]
            ri[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def det_exact(m: ExactMatrix) -> Fraction:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    if not m.is_square:
        raise DimensionError(f"determinant of non-square {m.rows}x{m.cols} matrix")
    rows, scale = _integer_rows(m.to_rows())
    return Fraction(bareiss_det(rows), scale)


def _gauss_jordan(a: list[list[int]], n: int) -> None:
    # Fraction-free Gauss-Jordan on an n-row augmented integer matrix.  On exit
    # every a[i][i] holds the same value d = +-det and a[i][n:] = d * solution.
    prev = 1
    for k in range(n):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    break
            else:
                raise SingularMatrixError("singular system")
        rowk = a[k]
        pivot = rowk[k]
        for i in range(n):
            if i == k:
                continue
            ri = a[i]
            aik = ri[k]
            if aik == 0:
                if pivot != prev:
                    a[i] = [pivot * x // prev for x in ri]
            else:
                a[i] = [(pivot * x - aik * y) // prev for x, y in zip(ri, rowk)]
        prev = pivot


def solve_many(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    """Solve ``a @ X = b`` for a matrix right-hand side."""
    if not a.is_square:
        raise DimensionError("system matrix must be square")
    if b.rows != a.rows:
        raise DimensionError("right-hand side has the wrong number of rows")
    n = a.rows
    aug, _ = _integer_rows([ra + rb for ra, rb in zip(a.to_rows(), b.to_rows())])
    _gauss_jordan(aug, n)
    return ExactMatrix.from_rows(
        [[Fraction(x, aug[i][i]) for x in aug[i][n:]] for i in range(n)], b.cols
    )


def solve_exact(a: ExactMatrix, b: Sequence) -> list[Fraction]:
    """Exact solution x of ``a @ x = b``."""
    if not a.is_square:
        raise DimensionError("system matrix must be square")
    if len(b) != a.rows:
        raise DimensionError(f"right-hand side has length {len(b)}, expected {a.rows}")
    x = solve_many(a, ExactMatrix(len(b), 1, tuple(b)))
    return list(x.entries)


def inverse_exact(a: ExactMatrix) -> ExactMatrix:
    return solve_many(a, ExactMatrix.identity(a.rows))


def schur_det(a: ExactMatrix, b: ExactMatrix, c: ExactMatrix, d: ExactMatrix) -> Fraction:
    """det([[a, b], [c, d]]) computed as det(d) * det(a - b d^-1 c)."""
    if not a.is_square or not d.is_square:
        raise DimensionError("diagonal blocks must be square")
    if b.rows != a.rows or b.cols != d.cols or c.rows != d.rows or c.cols != a.cols:
        raise DimensionError("blocks are not conformal")
    det_d = det_exact(d)
    if det_d == 0:
        raise SingularMatrixError("lower-right block is singular")
    return det_d * det_exact(a - b @ solve_many(d, c))
