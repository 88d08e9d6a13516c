"""Isomorphism and Morita decisions for SFT groupoids and their finite products.

Single groupoids are compared through (BF(A^t), u_A, sign det(id - A)).
Products are compared factorwise after a permutation, with exact
determinants and the tensor condition on unit classes.
"""
from __future__ import annotations

import logging
import math
from collections.abc import Sequence
from itertools import permutations, product

from pydantic import BaseModel, ConfigDict, model_validator

from ginv import config
from ginv.abelian.automorphisms import TorsionOrbit, find_automorphism
from ginv.abelian.groups import FgElement, FgGroup, GroupHom, reduce_coords, tensor
from ginv.errors import BoundExceeded
from ginv.sft import SftInvariants, SftMatrix, invariants

logger = logging.getLogger(__name__)


class Witness(BaseModel):
    """sigma[i] is the index of the B-factor matched with A-factor i; homs[i] acts on BF(A_i^t)."""

    model_config = ConfigDict(frozen=True)

    permutation: tuple[int, ...]
    homs: tuple[GroupHom, ...]

    @property
    def is_identity(self) -> bool:
        return (
            self.permutation == tuple(range(len(self.permutation)))
            and all(h == GroupHom.identity(h.domain) for h in self.homs)
        )


class ClassificationVerdict(BaseModel):
    model_config = ConfigDict(frozen=True)

    isomorphic: bool
    witness: Witness | None = None
    reason: str | None = None
    passed_filters: tuple[str, ...] = ()

    @model_validator(mode="after")
    def _witness_iff_isomorphic(self):
        if self.isomorphic != (self.witness is not None):
            raise ValueError("A witness is required exactly for positive verdicts")
        return self


def _negative(reason: str, passed: Sequence[str]) -> ClassificationVerdict:
    logger.debug("Not isomorphic: %s (passed %s)", reason, list(passed))
    return ClassificationVerdict(isomorphic=False, reason=reason, passed_filters=tuple(passed))


def sft_isomorphic(a: SftMatrix, b: SftMatrix, *, aut_bound: int | None = None) -> ClassificationVerdict:
    ia, ib = invariants(a), invariants(b)
    if ia.bf != ib.bf:
        return _negative(f"Bowen-Franks groups differ: {ia.bf} vs {ib.bf}", [])
    if ia.det_sign != ib.det_sign:
        return _negative(f"sign of det(id - A) differs: {ia.det_sign} vs {ib.det_sign}", ["bowen-franks"])
    phi = find_automorphism(ia.bf, ia.unit, ib.unit, aut_bound=aut_bound)
    if phi is None:
        return _negative("no isomorphism carries u_A to u_B", ["bowen-franks", "det-sign"])
    if phi(ia.unit) != ib.unit or not phi.is_isomorphism():
        raise AssertionError(f"Invalid witness {phi}")
    return ClassificationVerdict(
        isomorphic=True,
        witness=Witness(permutation=(0,), homs=(phi,)),
        passed_filters=("bowen-franks", "det-sign", "unit-class"),
    )


def sft_morita(a: SftMatrix, b: SftMatrix) -> bool:
    ia, ib = invariants(a), invariants(b)
    return ia.bf == ib.bf and ia.det_sign == ib.det_sign


class _TensorChain:
    """Coordinate-level left-folded tensor map for a fixed list of groups."""

    def __init__(self, groups: Sequence[FgGroup]):
        self.groups = list(groups)
        self.pairings = []
        group = groups[0]
        for nxt in groups[1:]:
            pairing = tensor(group, nxt)
            self.pairings.append(pairing)
            group = pairing.group
        self.group = group

    def coords(self, elements: Sequence[Sequence[int]]) -> tuple[int, ...]:
        x = reduce_coords(self.groups[0].orders, elements[0])
        for pairing, y in zip(self.pairings, elements[1:]):
            x = pairing.coords(x, y)
        return x


def _primitive_lift(x: Sequence[int], e: int) -> tuple[int, ...]:
    """A primitive integer vector congruent to ``x`` modulo ``e`` (needs gcd(x, e) == 1, len >= 2)."""
    x = list(x)
    x[1] += e
    g = math.gcd(*x[1:])
    k = 0
    while math.gcd(x[0] + k * e, g) != 1:
        k += 1
    x[0] += k * e
    return tuple(x)


def _free_candidates(rank: int, content: int, modulus: int | None) -> list[tuple[int, ...]]:
    """Free parts of content ``content``, one per class modulo ``modulus`` (all of them for rank 1)."""
    if content == 0:
        return [(0,) * rank]
    if rank == 1:
        return [(content,), (-content,)]
    result = []
    for x in product(range(modulus), repeat=rank):
        if math.gcd(modulus, *x) == 1:
            result.append(tuple(content * y for y in _primitive_lift(x, modulus)))
    return result


def _torsion_candidates(t: FgGroup, start: Sequence[int], content: int, aut_bound: int | None) -> set[tuple[int, ...]]:
    """{psi(start) + content * s : psi in Aut(t), s in t}."""
    orbit = set(TorsionOrbit(t, start, aut_bound=aut_bound))
    if content == 0:
        return orbit
    steps = [math.gcd(content, d) for d in t.torsion]
    shifts = list(product(*(range(0, d, step) for d, step in zip(t.torsion, steps))))
    return {reduce_coords(t.torsion, [a + b for a, b in zip(x, s)]) for x in orbit for s in shifts}


def _candidates(
    g: FgGroup, u: FgElement, free_parts: list[tuple[int, ...]], aut_bound: int | None, modulus: int | None
) -> list[tuple[int, ...]]:
    torsion = _torsion_candidates(g.torsion_part(), u.torsion_coords, u.content, aut_bound)
    seen = {}
    for f in free_parts:
        for t in sorted(torsion):
            key = f + t
            if modulus is not None:
                key = tuple(x % modulus for x in f) + tuple(
                    x % math.gcd(modulus, d) for x, d in zip(t, g.torsion)
                )
            seen.setdefault(key, f + t)
    return list(seen.values())


class _ProductSearch:
    def __init__(self, groups: list[FgGroup], units: list[FgElement], targets: list[FgElement],
                 aut_bound: int | None, tuple_bound: int | None):
        self.groups = groups
        self.units = units
        self.targets = targets
        self.aut_bound = aut_bound
        self.tuple_bound = tuple_bound or config.TUPLE_BOUND
        self.chain = _TensorChain(groups)
        self.goal = self.chain.coords([w.coords for w in targets])

    def _modulus(self) -> int | None:
        # Tensoring with a torsion factor (or a torsion unit) kills multiples of its exponent.
        for g, u in zip(self.groups, self.units):
            if g.is_finite or u.content == 0:
                return g.exponent
        return None

    def candidate_lists(self) -> list[list[tuple[int, ...]]] | None:
        modulus = self._modulus()
        lists = []
        for g, u, w in zip(self.groups, self.units, self.targets):
            if modulus is not None:
                free_parts = _free_candidates(g.free_rank, u.content, modulus)
            else:
                if w.content == 0:
                    return None
                # The free part of v must be +-c(u) times the primitive direction of w.
                direction = tuple(x // w.content for x in w.free_coords)
                free_parts = [tuple(s * u.content * x for x in direction) for s in (1, -1)]
            lists.append(_candidates(g, u, free_parts, self.aut_bound, modulus))
        return lists

    def search(self) -> list[FgElement] | None:
        if self.chain.coords([u.coords for u in self.units]) == self.goal:
            return list(self.units)
        lists = self.candidate_lists()
        if lists is None:
            return None
        total = math.prod(len(c) for c in lists)
        if total > self.tuple_bound:
            raise BoundExceeded("tuple-bound", total, self.tuple_bound)
        order = sorted(range(len(lists)), key=lambda i: len(lists[i]))
        logger.debug("Searching %d candidate unit tuples", total)
        for combo in product(*(lists[i] for i in order)):
            chosen = [None] * len(lists)
            for i, v in zip(order, combo):
                chosen[i] = v
            if self.chain.coords(chosen) == self.goal:
                return [g.element(v) for g, v in zip(self.groups, chosen)]
        return None


def _verify_product_witness(groups, units, targets, homs):
    chain = _TensorChain(groups)
    images = [phi(u).coords for phi, u in zip(homs, units)]
    if not all(phi.is_isomorphism() for phi in homs):
        raise AssertionError("Witness homomorphism is not an isomorphism")
    if chain.coords(images) != chain.coords([w.coords for w in targets]):
        raise AssertionError("Witness does not carry the unit tensor to the unit tensor")


def product_isomorphic(
    as_: Sequence[SftMatrix],
    bs: Sequence[SftMatrix],
    *,
    aut_bound: int | None = None,
    tuple_bound: int | None = None,
) -> ClassificationVerdict:
    """Decide whether two products of SFT groupoids are isomorphic.

    Determinants are compared exactly, unlike the sign comparison made by
    :func:`sft_isomorphic` for a single factor.
    """
    if len(as_) != len(bs):
        return _negative(f"factor counts differ: {len(as_)} vs {len(bs)}", [])
    ia: list[SftInvariants] = [invariants(a) for a in as_]
    ib: list[SftInvariants] = [invariants(b) for b in bs]
    n = len(ia)
    passed = ["factor-count"]
    matched = False
    for sigma in permutations(range(n)):
        if any(ia[i].bf != ib[sigma[i]].bf or ia[i].determinant != ib[sigma[i]].determinant for i in range(n)):
            continue
        matched = True
        logger.debug("Trying permutation %s", sigma)
        groups = [ia[i].bf for i in range(n)]
        units = [ia[i].unit for i in range(n)]
        targets = [ib[sigma[i]].unit for i in range(n)]
        try:
            images = _ProductSearch(groups, units, targets, aut_bound, tuple_bound).search()
        except BoundExceeded as e:
            e.passed_filters = ("factor-count", "bowen-franks", "determinant")
            logger.warning("Unit-tensor search for permutation %s stopped after filters %s passed: %s",
                           sigma, ", ".join(e.passed_filters), e)
            raise
        if images is None:
            continue
        homs = []
        for g, u, v in zip(groups, units, images):
            phi = find_automorphism(g, u, v, aut_bound=aut_bound)
            if phi is None:
                raise AssertionError(f"{v} was chosen from the orbit of {u} but no automorphism maps to it")
            homs.append(phi)
        _verify_product_witness(groups, units, targets, homs)
        return ClassificationVerdict(
            isomorphic=True,
            witness=Witness(permutation=tuple(sigma), homs=tuple(homs)),
            passed_filters=("factor-count", "bowen-franks", "determinant", "unit-tensor"),
        )
    if not matched:
        return _negative("no permutation matches Bowen-Franks groups and determinants", passed)
    return _negative("no factor isomorphisms carry the unit tensor to the unit tensor",
                     passed + ["bowen-franks", "determinant"])
