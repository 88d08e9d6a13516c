from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from sympy import Matrix


@dataclass(frozen=True)
class IntMatrix:
    """Dense matrix of Python integers stored row-major."""

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError(f"Invalid shape {self.rows}x{self.cols}")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"Expected {self.rows * self.cols} entries, got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> IntMatrix:
        rows = [list(row) for row in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(row) != ncols for row in rows):
            raise ValueError("Ragged rows")
        return cls(len(rows), ncols, tuple(int(x) for row in rows for x in row))

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls(n, n, tuple(int(i == j) for i in range(n) for j in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> IntMatrix:
        return cls(rows, cols, (0,) * (rows * cols))

    @classmethod
    def diagonal(cls, values: Iterable[int]) -> IntMatrix:
        values = list(values)
        n = len(values)
        return cls(n, n, tuple(values[i] if i == j else 0 for i in range(n) for j in range(n)))

    @classmethod
    def column(cls, values: Iterable[int]) -> IntMatrix:
        values = tuple(int(v) for v in values)
        return cls(len(values), 1, values)

    def __getitem__(self, key: tuple[int, int]) -> int:
        i, j = key
        return self.entries[i * self.cols + j]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def col(self, j: int) -> tuple[int, ...]:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def to_rows(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> IntMatrix:
        return IntMatrix(
            self.cols, self.rows,
            tuple(self[i, j] for j in range(self.cols) for i in range(self.rows)),
        )

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        if self.cols != other.rows:
            raise ValueError(f"Shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        other_cols = [other.col(j) for j in range(other.cols)]
        return IntMatrix(
            self.rows, other.cols,
            tuple(
                sum(a * b for a, b in zip(self.row(i), col))
                for i in range(self.rows)
                for col in other_cols
            ),
        )

    def __sub__(self, other: IntMatrix) -> IntMatrix:
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("Shape mismatch")
        return IntMatrix(self.rows, self.cols, tuple(a - b for a, b in zip(self.entries, other.entries)))

    def apply(self, vector: Sequence[int]) -> tuple[int, ...]:
        """Matrix-vector product."""
        if len(vector) != self.cols:
            raise ValueError("Shape mismatch")
        return tuple(sum(a * x for a, x in zip(self.row(i), vector)) for i in range(self.rows))

    def permuted(self, perm: Sequence[int]) -> IntMatrix:
        """Simultaneous row/column relabelling: result[i, j] = self[perm[i], perm[j]]."""
        return IntMatrix.from_rows([[self[perm[i], perm[j]] for j in range(self.cols)] for i in range(self.rows)])

    def to_sympy(self) -> Matrix:
        return Matrix(self.rows, self.cols, list(self.entries))


def determinant(m: IntMatrix) -> int:
    """Exact determinant by fraction-free Bareiss elimination."""
    if not m.is_square:
        raise ValueError("Determinant of a non-square matrix")
    if m.rows == 0:
        return 1
    return int(m.to_sympy().det(method="bareiss"))


def unimodular_inverse(m: IntMatrix) -> IntMatrix:
    """Inverse of an integer matrix with determinant +-1."""
    if abs(determinant(m)) != 1:
        raise ValueError("Matrix is not unimodular")
    inv = m.to_sympy().inv()
    return IntMatrix(m.rows, m.cols, tuple(int(x) for x in inv))
