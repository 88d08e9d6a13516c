"""Homology and K-theory of finite products of SFT groupoids."""
from __future__ import annotations

import logging
from collections import defaultdict
from collections.abc import Sequence
from functools import reduce
from math import comb

from pydantic import BaseModel, ConfigDict

from ginv.abelian.groups import FgElement, FgGroup, direct_sum, tensor, tor
from ginv.graded import GradedGroups
from ginv.sft import SftMatrix, invariants

logger = logging.getLogger(__name__)


class HkReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    holds: bool
    h_even: FgGroup
    h_odd: FgGroup
    k0: FgGroup
    k1: FgGroup


class H1Decomposition(BaseModel):
    """H_1 of a product split as the part from a single H_1 factor plus the Tor parts T_p."""

    model_config = ConfigDict(frozen=True)

    split_part: FgGroup
    torsion_parts: tuple[FgGroup, ...]

    @property
    def total(self) -> FgGroup:
        return direct_sum(self.split_part, *self.torsion_parts)


def _require_factors(factors: Sequence[SftMatrix]):
    if not factors:
        raise ValueError("At least one factor is required")


def single_factor_homology(a: SftMatrix) -> GradedGroups:
    return invariants(a).homology


def kunneth_pair(g: GradedGroups, h: GradedGroups) -> GradedGroups:
    """Homology of a product from the split Kunneth sequence."""
    summands: dict[int, list[FgGroup]] = defaultdict(list)
    for i, gi in g.groups.items():
        for j, hj in h.groups.items():
            summands[i + j].append(tensor(gi, hj).group)
            summands[i + j + 1].append(tor(gi, hj))
    unit_map = tensor(g[0], h[0])
    return GradedGroups(
        groups={n: direct_sum(*parts) if n else unit_map.group for n, parts in summands.items()},
        unit_class=unit_map(g.unit_class, h.unit_class),
    )


def tensor_all(groups: Sequence[FgGroup], elements: Sequence[FgElement] | None = None):
    """Left-folded tensor product of ``groups``, with the image of ``elements`` when given."""
    group = groups[0]
    element = elements[0] if elements is not None else None
    for k in range(1, len(groups)):
        pairing = tensor(group, groups[k])
        if element is not None:
            element = pairing(element, elements[k])
        group = pairing.group
    return group, element


def _power(g: FgGroup, m: int) -> FgGroup:
    return direct_sum(*([g] * m))


def product_homology(factors: Sequence[SftMatrix]) -> GradedGroups:
    """Closed-form homology of the product groupoid.

    H_k = Z^C(n-1,k) (x) H_0(A_1) (x) ... (x) H_0(A_n)
        + Z^C(n-1,k-1) (x) H_1(A_1) (x) ... (x) H_1(A_n).
    """
    _require_factors(factors)
    n = len(factors)
    invs = [invariants(a) for a in factors]
    h0, unit = tensor_all([inv.bf for inv in invs], [inv.unit for inv in invs])
    h1, _ = tensor_all([inv.k1 for inv in invs])
    groups = {0: h0}
    for k in range(1, n + 1):
        groups[k] = direct_sum(_power(h0, comb(n - 1, k)), _power(h1, comb(n - 1, k - 1)))
    return GradedGroups(groups=groups, unit_class=unit)


def iterated_kunneth(factors: Sequence[SftMatrix]) -> GradedGroups:
    """Left fold of :func:`kunneth_pair` over the factor homologies."""
    _require_factors(factors)
    return reduce(kunneth_pair, (single_factor_homology(a) for a in factors))


def product_k_theory(factors: Sequence[SftMatrix]) -> tuple[FgGroup, FgGroup]:
    """(K_0, K_1) of the product via the Z/2-graded Kunneth formula."""
    _require_factors(factors)
    k0, k1 = None, None
    for a in factors:
        inv = invariants(a)
        if k0 is None:
            k0, k1 = inv.k0, inv.k1
            continue
        l0, l1 = inv.k0, inv.k1
        k0, k1 = (
            direct_sum(tensor(k0, l0).group, tensor(k1, l1).group, tor(k0, l1), tor(k1, l0)),
            direct_sum(tensor(k0, l1).group, tensor(k1, l0).group, tor(k0, l0), tor(k1, l1)),
        )
    return k0, k1


def hk_check(factors: Sequence[SftMatrix]) -> HkReport:
    homology = product_homology(factors)
    k0, k1 = product_k_theory(factors)
    h_even, h_odd = homology.even_part(), homology.odd_part()
    holds = h_even == k0 and h_odd == k1
    if not holds:
        logger.warning("HK identity fails: H_even=%s K_0=%s H_odd=%s K_1=%s", h_even, k0, h_odd, k1)
    return HkReport(holds=holds, h_even=h_even, h_odd=h_odd, k0=k0, k1=k1)


def h1_decomposition(factors: Sequence[SftMatrix]) -> H1Decomposition:
    """H_1 as the sum over single H_1 factors plus T_1, ..., T_{n-1}.

    T_p = H_0(A_1) (x) ... (x) H_0(A_{p-1}) (x) Tor(H_0(A_p), H_0(A_{p+1}) (x) ... (x) H_0(A_n)).
    """
    _require_factors(factors)
    invs = [invariants(a) for a in factors]
    n = len(invs)
    h0 = [inv.bf for inv in invs]
    split = []
    for q in range(n):
        parts = [invs[d].k1 if d == q else h0[d] for d in range(n)]
        split.append(tensor_all(parts)[0])
    torsion_parts = []
    for p in range(n - 1):
        tail, _ = tensor_all(h0[p + 1:])
        parts = h0[:p] + [tor(h0[p], tail)]
        torsion_parts.append(tensor_all(parts)[0])
    return H1Decomposition(split_part=direct_sum(*split), torsion_parts=tuple(torsion_parts))
