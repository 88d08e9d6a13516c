"""The defining relations of W_{n,k}: instantiation, verification on tables, characters."""
from __future__ import annotations

import logging
import math
from collections import Counter
from collections.abc import Sequence
from functools import lru_cache
from itertools import product
from typing import Literal

from pydantic import BaseModel, ConfigDict

from ginv import config
from ginv.errors import BoundExceeded
from ginv.tables.element import TableElement, compose, equal, inverse
from ginv.tables.generators import alpha_word, gen_s, gen_tau, tau_tilde_word

logger = logging.getLogger(__name__)

FAMILIES = (
    "s-s",
    "tau-square",
    "tau-commute",
    "tau-braid",
    "s-tau-above",
    "s-tau-split",
    "s-tau-below",
    "s-alpha",
)


class Letter(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: Literal["s", "tau"]
    index: int
    coord: int | None = None
    inverse: bool = False

    def __str__(self) -> str:
        name = f"s_{self.index},{self.coord}" if self.kind == "s" else f"t_{self.index}"
        return name + ("^-1" if self.inverse else "")


def s(i: int, d: int) -> Letter:
    return Letter(kind="s", index=i, coord=d)


def t(i: int) -> Letter:
    return Letter(kind="tau", index=i)


Word = tuple[Letter, ...]


class RelationInstance(BaseModel):
    """lhs == rhs, both words read as compositions (right-most letter first)."""

    model_config = ConfigDict(frozen=True)

    family: str
    params: dict[str, int]
    lhs: Word
    rhs: Word

    def __str__(self) -> str:
        return f"{''.join(map(str, self.lhs)) or '1'} = {''.join(map(str, self.rhs)) or '1'}"


class RelationFailure(BaseModel):
    model_config = ConfigDict(frozen=True)

    family: str
    params: dict[str, int]
    relation: str


class RelationReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    arity: tuple[int, ...]
    index_bound: int
    checked: dict[str, int]
    failures: tuple[RelationFailure, ...]

    @property
    def passed(self) -> bool:
        return not self.failures


class CharacterAssignment(BaseModel):
    """Values of a homomorphism W_{n,k} -> Z/m on every s_{i,d} (x[d-1]) and every tau_i (t)."""

    model_config = ConfigDict(frozen=True)

    modulus: int
    x: tuple[int, ...]
    t: int
    surjective: bool


def relation_instances(arity: Sequence[int], index_bound: int) -> list[RelationInstance]:
    """Every relation of W_{n,k} whose leading indices are at most ``index_bound``."""
    if index_bound < 2:
        raise ValueError("index_bound must be at least 2")
    k = tuple(arity)
    n = len(k)
    coords = range(1, n + 1)
    indices = range(1, index_bound + 1)
    result = []

    def add(family, params, lhs, rhs):
        result.append(RelationInstance(family=family, params=params, lhs=tuple(lhs), rhs=tuple(rhs)))

    for i, j in product(indices, indices):
        if i < j:
            for d, d2 in product(coords, coords):
                add("s-s", {"i": i, "j": j, "d": d, "d2": d2},
                    [s(i, d), s(j, d2)], [s(j + k[d - 1] - 1, d2), s(i, d)])
    for i in indices:
        add("tau-square", {"i": i}, [t(i), t(i)], [])
    for i, j in product(indices, indices):
        if j - i >= 2:
            add("tau-commute", {"i": i, "j": j}, [t(i), t(j)], [t(j), t(i)])
    for i in indices:
        add("tau-braid", {"i": i}, [t(i), t(i + 1), t(i)], [t(i + 1), t(i), t(i + 1)])
    for i, j, d in product(indices, indices, coords):
        if i < j:
            add("s-tau-above", {"i": i, "j": j, "d": d}, [s(i, d), t(j)], [t(j + k[d - 1] - 1), s(i, d)])
        if i > j + 1:
            add("s-tau-below", {"i": i, "j": j, "d": d}, [s(i, d), t(j)], [t(j), s(i, d)])
    for i, d in product(indices, coords):
        add("s-tau-split", {"i": i, "d": d},
            [s(i, d), t(i)], [t(j) for j in tau_tilde_word(i, d, k)] + [s(i + 1, d)])
    for i, d, d2 in product(indices, coords, coords):
        if d != d2:
            lhs = [s(i + m, d2) for m in range(k[d - 1])] + [s(i, d)]
            rhs = ([t(j) for j in alpha_word(i, d, d2, k).word]
                   + [s(i + m, d) for m in range(k[d2 - 1])] + [s(i, d2)])
            add("s-alpha", {"i": i, "d": d, "d2": d2}, lhs, rhs)
    return result


@lru_cache(maxsize=4096)
def letter_element(letter: Letter, arity: tuple[int, ...]) -> TableElement:
    element = gen_s(letter.index, letter.coord, arity) if letter.kind == "s" else gen_tau(letter.index, arity)
    return inverse(element) if letter.inverse else element


def word_element(word: Sequence[Letter], arity: Sequence[int], *, max_depth: int | None = None) -> TableElement:
    """The product of the letters of ``word``, the right-most acting first."""
    arity = tuple(arity)
    result = TableElement.identity(arity)
    for letter in word:
        result = compose(result, letter_element(letter, arity), max_depth=max_depth)
    return result


def verify_relations(
    arity: Sequence[int], index_bound: int | None = None, *, max_depth: int | None = None
) -> RelationReport:
    index_bound = index_bound or config.INDEX_BOUND
    arity = tuple(arity)
    checked: Counter[str] = Counter()
    failures = []
    for rel in relation_instances(arity, index_bound):
        checked[rel.family] += 1
        lhs = word_element(rel.lhs, arity, max_depth=max_depth)
        rhs = word_element(rel.rhs, arity, max_depth=max_depth)
        if not equal(lhs, rhs):
            logger.warning("Relation %s %s fails: %s", rel.family, rel.params, rel)
            failures.append(RelationFailure(family=rel.family, params=rel.params, relation=str(rel)))
    logger.debug("Checked %d relations over arity %s", sum(checked.values()), arity)
    return RelationReport(
        arity=arity,
        index_bound=index_bound,
        checked={family: checked[family] for family in FAMILIES},
        failures=tuple(failures),
    )


def character_value(word: Sequence[Letter], x: Sequence[int], t_value: int, modulus: int) -> int:
    total = 0
    for letter in word:
        value = x[letter.coord - 1] if letter.kind == "s" else t_value
        total += -value if letter.inverse else value
    return total % modulus


def _satisfies_linear_system(arity: Sequence[int], x: Sequence[int], t_value: int, m: int) -> bool:
    if 2 * t_value % m:
        return False
    if any((k - 1) * t_value % m for k in arity):
        return False
    for d, d2 in product(range(1, len(arity) + 1), repeat=2):
        if d == d2:
            continue
        parity = 1 if alpha_word(1, d, d2, arity).parity == "odd" else 0
        k, k2 = arity[d - 1], arity[d2 - 1]
        if ((k - 1) * x[d2 - 1] - (k2 - 1) * x[d - 1] - parity * t_value) % m:
            return False
    return True


def character_search(
    arity: Sequence[int],
    target_order: int,
    *,
    index_bound: int | None = None,
    tuple_bound: int | None = None,
) -> list[CharacterAssignment]:
    """All index-independent homomorphisms W_{n,k} -> Z/target_order.

    Candidates solving the reduced linear system are re-checked against
    every instantiated relation.
    """
    if target_order < 2:
        raise ValueError("target_order must be at least 2")
    arity = tuple(arity)
    m = target_order
    limit = tuple_bound or config.TUPLE_BOUND
    size = m ** (len(arity) + 1)
    if size > limit:
        raise BoundExceeded("tuple-bound", size, limit)
    relations = relation_instances(arity, max(2, index_bound or config.INDEX_BOUND))
    found = []
    for values in product(range(m), repeat=len(arity) + 1):
        x, t_value = values[:-1], values[-1]
        if not _satisfies_linear_system(arity, x, t_value, m):
            continue
        for rel in relations:
            if character_value(rel.lhs, x, t_value, m) != character_value(rel.rhs, x, t_value, m):
                raise AssertionError(f"Assignment x={x} t={t_value} violates {rel}")
        found.append(CharacterAssignment(
            modulus=m, x=tuple(x), t=t_value, surjective=math.gcd(m, t_value, *x) == 1,
        ))
    logger.debug("Found %d characters into Z/%d for arity %s", len(found), m, arity)
    return found
