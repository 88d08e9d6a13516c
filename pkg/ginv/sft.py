"""Adjacency matrices of one-sided shifts of finite type and their invariants.

For an irreducible non-permutation matrix ``A`` the groupoid homology is

* ``H_0 = BF(A^t) = Z^N / (id - A^t) Z^N`` with unit class the all-ones vector,
* ``H_1 = ker(id - A^t)``,
* ``H_n = 0`` for ``n >= 2``,

and the K-groups coincide with ``H_0`` and ``H_1``.
"""
from __future__ import annotations

import logging
from collections.abc import Sequence

import networkx as nx
from pydantic import BaseModel, ConfigDict

from ginv.abelian.groups import FgElement, FgGroup, cokernel, direct_sum, kernel_group, tensor
from ginv.abelian.matrix import IntMatrix, determinant
from ginv.errors import NegativeEntry, NotSquare, PermutationMatrix, Reducible
from ginv.graded import GradedGroups

logger = logging.getLogger(__name__)


class SftMatrix(BaseModel):
    """A validated adjacency matrix. Build it with :func:`validate`."""

    model_config = ConfigDict(frozen=True)

    rows: tuple[tuple[int, ...], ...]

    @property
    def a(self) -> IntMatrix:
        return IntMatrix.from_rows(self.rows)

    @property
    def size(self) -> int:
        return len(self.rows)

    def to_rows(self) -> list[list[int]]:
        return [list(row) for row in self.rows]


class SftInvariants(BaseModel):
    model_config = ConfigDict(frozen=True)

    bf: FgGroup
    unit: FgElement
    determinant: int
    det_sign: int
    homology: GradedGroups
    h1_basis: tuple[tuple[int, ...], ...]
    k0: FgGroup
    k1: FgGroup


def _is_permutation(a: IntMatrix) -> bool:
    rows = a.to_rows()
    if any(x not in (0, 1) for row in rows for x in row):
        return False
    return all(sum(row) == 1 for row in rows) and all(sum(a.col(j)) == 1 for j in range(a.cols))


def support_graph(a: IntMatrix) -> nx.DiGraph:
    graph = nx.DiGraph()
    graph.add_nodes_from(range(a.rows))
    graph.add_edges_from((i, j) for i in range(a.rows) for j in range(a.cols) if a[i, j] > 0)
    return graph


def validate(a: IntMatrix | Sequence[Sequence[int]], *, factor: int | None = None) -> SftMatrix:
    """Check the standing assumptions on an adjacency matrix.

    Raises the :class:`ginv.errors.ValidationError` subclass naming the first
    failed condition.
    """
    if not isinstance(a, IntMatrix):
        rows = [list(row) for row in a]
        if any(len(row) != len(rows) for row in rows):
            raise NotSquare("matrix is not square", factor=factor)
        a = IntMatrix.from_rows(rows)
    if not a.is_square or a.rows == 0:
        raise NotSquare(f"matrix of shape {a.rows}x{a.cols} is not a nonempty square matrix", factor=factor)
    if any(x < 0 for x in a.entries):
        raise NegativeEntry("matrix has a negative entry", factor=factor)
    graph = support_graph(a)
    if not nx.is_strongly_connected(graph) or (a.rows == 1 and a[0, 0] == 0):
        components = nx.number_strongly_connected_components(graph)
        raise Reducible(f"matrix is reducible ({components} strongly connected components)", factor=factor)
    if _is_permutation(a):
        raise PermutationMatrix("matrix is a permutation matrix", factor=factor)
    return SftMatrix(rows=tuple(tuple(row) for row in a.to_rows()))


def higman_thompson_matrix(k: int, r: int) -> SftMatrix:
    """The r x r matrix A_{k,r}: k in the top right corner and ones below the diagonal.

    Its groupoid has H_0 = Z/(k-1) with unit class r and full group V_{k,r}.
    """
    if k < 2 or r < 1:
        raise ValueError(f"A_{{k,r}} needs k >= 2 and r >= 1, got k={k}, r={r}")
    rows = [[0] * r for _ in range(r)]
    rows[0][r - 1] = k
    for i in range(1, r):
        rows[i][i - 1] = 1
    return validate(rows)


def nv_factors(n: int, k: int, r: int) -> list[SftMatrix]:
    """Factors A_{k,r} x A_{k,1}^(n-1) whose product groupoid has full group nV_{k,r}."""
    if n < 1:
        raise ValueError("n must be positive")
    return [higman_thompson_matrix(k, r)] + [higman_thompson_matrix(k, 1)] * (n - 1)


def invariants(a: SftMatrix) -> SftInvariants:
    n = a.size
    identity = IntMatrix.identity(n)
    presentation = identity - a.a.transpose()
    bf, quotient = cokernel(presentation)
    unit = quotient([1] * n)
    det = determinant(identity - a.a)
    kernel = kernel_group(presentation)
    homology = GradedGroups(groups={0: bf, 1: kernel.group}, unit_class=unit)
    logger.debug("Invariants of %s: BF=%s unit=%s det=%d", a.to_rows(), bf, unit.coords, det)
    return SftInvariants(
        bf=bf,
        unit=unit,
        determinant=det,
        det_sign=(det > 0) - (det < 0),
        homology=homology,
        h1_basis=kernel.basis,
        k0=bf,
        k1=kernel.group,
    )


def is_primitive(a: SftMatrix) -> bool:
    """True iff some power of ``a`` is entrywise positive (Wielandt bound)."""
    n = a.size
    support = [[x > 0 for x in row] for row in a.to_rows()]
    power = support
    for _ in range((n - 1) ** 2 + 1):
        if all(all(row) for row in power):
            return True
        power = [
            [any(power[i][m] and support[m][j] for m in range(n)) for j in range(n)]
            for i in range(n)
        ]
    return False


def sft_abelianization(a: SftMatrix) -> FgGroup:
    """(H_0 (x) Z/2) + H_1, the abelianized full group of a single SFT groupoid."""
    inv = invariants(a)
    return direct_sum(tensor(inv.bf, FgGroup.cyclic(2)).group, inv.k1)
