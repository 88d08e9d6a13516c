"""Smith normal form with transforming matrices.

The reduction repeatedly moves the entry of least absolute value in the
remaining block to the pivot position, clears its row and column by
integer division, and restores divisibility by adding an offending row
to the pivot row.  Every row operation is mirrored on ``u`` and every
column operation on ``v`` so that ``u @ m @ v == s`` at the end.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass

from ginv.abelian.matrix import IntMatrix

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SnfResult:
    u: IntMatrix
    s: IntMatrix
    v: IntMatrix

    @property
    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.s[i, i] for i in range(min(self.s.rows, self.s.cols)))

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d != 0)


class _Reducer:
    def __init__(self, m: IntMatrix):
        self.a = m.to_rows()
        self.rows = m.rows
        self.cols = m.cols
        self.u = IntMatrix.identity(m.rows).to_rows()
        self.v = IntMatrix.identity(m.cols).to_rows()

    def swap_rows(self, i: int, j: int):
        if i != j:
            self.a[i], self.a[j] = self.a[j], self.a[i]
            self.u[i], self.u[j] = self.u[j], self.u[i]

    def swap_cols(self, i: int, j: int):
        if i != j:
            for row in self.a:
                row[i], row[j] = row[j], row[i]
            for row in self.v:
                row[i], row[j] = row[j], row[i]

    def add_row(self, target: int, source: int, factor: int):
        """row[target] += factor * row[source]"""
        if factor:
            src, dst = self.a[source], self.a[target]
            for k in range(self.cols):
                dst[k] += factor * src[k]
            src, dst = self.u[source], self.u[target]
            for k in range(self.rows):
                dst[k] += factor * src[k]

    def add_col(self, target: int, source: int, factor: int):
        """col[target] += factor * col[source]"""
        if factor:
            for row in self.a:
                row[target] += factor * row[source]
            for row in self.v:
                row[target] += factor * row[source]

    def negate_row(self, i: int):
        self.a[i] = [-x for x in self.a[i]]
        self.u[i] = [-x for x in self.u[i]]

    def least_entry(self, s: int) -> tuple[int, int] | None:
        best = None
        best_value = 0
        for i in range(s, self.rows):
            row = self.a[i]
            for j in range(s, self.cols):
                x = abs(row[j])
                if x and (best is None or x < best_value):
                    best, best_value = (i, j), x
                    if x == 1:
                        return best
        return best

    def edge_is_clear(self, s: int) -> bool:
        return (
            all(self.a[i][s] == 0 for i in range(s + 1, self.rows))
            and all(self.a[s][j] == 0 for j in range(s + 1, self.cols))
        )

    def non_divisible_row(self, s: int) -> int | None:
        pivot = self.a[s][s]
        for i in range(s + 1, self.rows):
            if any(self.a[i][j] % pivot for j in range(s + 1, self.cols)):
                return i
        return None

    def reduce(self) -> SnfResult:
        for s in range(min(self.rows, self.cols)):
            while True:
                pos = self.least_entry(s)
                if pos is None:
                    return self.result()
                self.swap_rows(s, pos[0])
                self.swap_cols(s, pos[1])
                pivot = self.a[s][s]
                for i in range(s + 1, self.rows):
                    self.add_row(i, s, -(self.a[i][s] // pivot))
                for j in range(s + 1, self.cols):
                    self.add_col(j, s, -(self.a[s][j] // pivot))
                if not self.edge_is_clear(s):
                    continue
                offending = self.non_divisible_row(s)
                if offending is None:
                    break
                self.add_row(s, offending, 1)
            if self.a[s][s] < 0:
                self.negate_row(s)
        return self.result()

    def result(self) -> SnfResult:
        return SnfResult(
            u=IntMatrix.from_rows(self.u) if self.rows else IntMatrix.zeros(0, 0),
            s=IntMatrix(self.rows, self.cols, tuple(x for row in self.a for x in row)),
            v=IntMatrix.from_rows(self.v) if self.cols else IntMatrix.zeros(0, 0),
        )


def smith_normal_form(m: IntMatrix) -> SnfResult:
    """Return ``SnfResult(u, s, v)`` with ``u @ m @ v == s`` and ``u``, ``v`` unimodular.

    The diagonal of ``s`` is non-negative, each entry divides the next and
    all zeros trail.
    """
    result = _Reducer(m).reduce()
    logger.debug("SNF of %dx%d matrix: diagonal %s", m.rows, m.cols, result.diagonal)
    return result
