"""Generators s_{i,d}, tau_i of W_{n,k} and elements derived from them.

Coordinates d are numbered from 1 to n.  Words are read as compositions:
the right-most letter acts first.
"""
from __future__ import annotations

import logging
from collections.abc import Mapping, Sequence
from typing import Literal

from pydantic import BaseModel, ConfigDict

from ginv.errors import ArityMismatch, CoordinateOutOfRange
from ginv.tables.element import Brick, TableElement, compose, inverse

logger = logging.getLogger(__name__)


def _check_arity(arity: Sequence[int]):
    if not arity or any(k < 2 for k in arity):
        raise ValueError(f"Arities must be >= 2, got {tuple(arity)}")


def _check_coordinate(d: int, arity: Sequence[int]):
    if not 1 <= d <= len(arity):
        raise CoordinateOutOfRange(f"Coordinate {d} outside 1..{len(arity)}")


def _check_index(i: int):
    if i < 1:
        raise ValueError(f"Index {i} must be positive")


def _identity_below(n: int, i: int) -> tuple:
    return tuple((Brick.full(n, j), Brick.full(n, j)) for j in range(1, i))


def _letter_brick(n: int, d: int, letter: int, index: int) -> Brick:
    return Brick(tuple((letter,) if c == d - 1 else () for c in range(n)), index)


def gen_s(i: int, d: int, arity: Sequence[int]) -> TableElement:
    """s_{i,d}: consumes the first letter a of coordinate d at index i and moves to index i + a."""
    _check_arity(arity)
    _check_coordinate(d, arity)
    _check_index(i)
    n, k = len(arity), arity[d - 1]
    split = tuple((_letter_brick(n, d, a, i), Brick.full(n, i + a)) for a in range(k))
    return TableElement(tuple(arity), i, k - 1, _identity_below(n, i) + split)


def gen_tau(i: int, arity: Sequence[int]) -> TableElement:
    """tau_i: swaps the index levels i and i + 1."""
    _check_arity(arity)
    _check_index(i)
    return permutation_element({i: i + 1, i + 1: i}, arity)


def permutation_element(mapping: Mapping[int, int], arity: Sequence[int]) -> TableElement:
    """The element (z, j) -> (z, mapping[j]), fixing indices outside the mapping."""
    _check_arity(arity)
    support = {j for j, image in mapping.items() if j != image}
    if set(mapping[j] for j in support) != support or any(j < 1 for j in support):
        raise ValueError(f"{dict(mapping)} is not a permutation of positive indices")
    n = len(arity)
    bound = max(support, default=0)
    table = tuple(
        (Brick.full(n, j), Brick.full(n, mapping.get(j, j))) for j in range(1, bound + 1)
    )
    return TableElement(tuple(arity), bound, 0, table)


def word_from_letters(elements: Sequence[TableElement], arity: Sequence[int]) -> TableElement:
    result = TableElement.identity(arity)
    for element in elements:
        result = compose(result, element)
    return result


def tau_tilde_word(i: int, d: int, arity: Sequence[int]) -> tuple[int, ...]:
    """Indices of tau_{i+k(d)-1} ... tau_{i+1} tau_i in written order."""
    _check_coordinate(d, arity)
    return tuple(range(i + arity[d - 1] - 1, i - 1, -1))


def tau_tilde(i: int, d: int, arity: Sequence[int]) -> TableElement:
    return word_from_letters([gen_tau(j, arity) for j in tau_tilde_word(i, d, arity)], arity)


def permutation_parity(mapping: Mapping[int, int]) -> int:
    """0 for even, 1 for odd permutations given as a finite mapping."""
    seen = set()
    parity = 0
    for start in mapping:
        if start in seen:
            continue
        length = 0
        j = start
        while j not in seen:
            seen.add(j)
            j = mapping.get(j, j)
            length += 1
        parity ^= (length - 1) & 1
    return parity


class AlphaWord(BaseModel):
    """A word in the tau_j inducing the grid transpose on [i, i + k(d) k(d') - 1]."""

    model_config = ConfigDict(frozen=True)

    start: int
    mapping: dict[int, int]
    word: tuple[int, ...]
    parity: Literal["even", "odd"]


def alpha_permutation(i: int, d: int, d2: int, arity: Sequence[int]) -> dict[int, int]:
    """i + p k(d) + q -> i + q k(d') + p for 0 <= p < k(d'), 0 <= q < k(d)."""
    _check_coordinate(d, arity)
    _check_coordinate(d2, arity)
    k, k2 = arity[d - 1], arity[d2 - 1]
    return {i + p * k + q: i + q * k2 + p for p in range(k2) for q in range(k)}


def alpha_word(i: int, d: int, d2: int, arity: Sequence[int]) -> AlphaWord:
    """Decompose the grid transpose into adjacent transpositions by bubble sort."""
    if d == d2:
        raise ValueError("alpha needs two distinct coordinates")
    _check_index(i)
    mapping = alpha_permutation(i, d, d2, arity)
    size = len(mapping)
    # arr[c] is the destination of the token now sitting at position i + c.
    arr = [mapping[i + c] for c in range(size)]
    swaps = []
    for end in range(size - 1, 0, -1):
        for c in range(end):
            if arr[c] > arr[c + 1]:
                arr[c], arr[c + 1] = arr[c + 1], arr[c]
                swaps.append(i + c)
    return AlphaWord(
        start=i,
        mapping=mapping,
        word=tuple(reversed(swaps)),
        parity="odd" if len(swaps) % 2 else "even",
    )


def alpha_element(i: int, d: int, d2: int, arity: Sequence[int]) -> TableElement:
    alpha = alpha_word(i, d, d2, arity)
    return word_from_letters([gen_tau(j, arity) for j in alpha.word], arity)


def baker(d: int, d2: int, arity: Sequence[int], index: int = 1) -> TableElement:
    """Moves the first letter of coordinate d2 to the front of coordinate d on one index level."""
    _check_arity(arity)
    _check_coordinate(d, arity)
    _check_coordinate(d2, arity)
    _check_index(index)
    if d == d2:
        raise ValueError("The baker's map needs two distinct coordinates")
    if arity[d - 1] != arity[d2 - 1]:
        raise ArityMismatch(f"Coordinates {d} and {d2} have arities {arity[d - 1]} and {arity[d2 - 1]}")
    n = len(arity)
    moves = tuple(
        (_letter_brick(n, d2, a, index), _letter_brick(n, d, a, index)) for a in range(arity[d - 1])
    )
    return TableElement(tuple(arity), index, 0, _identity_below(n, index) + moves)


def baker_from_generators(d: int, d2: int, arity: Sequence[int]) -> TableElement:
    """s_{1,d}^{-1} s_{1,d2}."""
    _check_coordinate(d, arity)
    _check_coordinate(d2, arity)
    if arity[d - 1] != arity[d2 - 1]:
        raise ArityMismatch(f"Coordinates {d} and {d2} have arities {arity[d - 1]} and {arity[d2 - 1]}")
    return compose(inverse(gen_s(1, d, arity)), gen_s(1, d2, arity))


def transposition(d: int, arity: Sequence[int]) -> TableElement:
    """s_{1,d}^{-1} tau_1 s_{1,d}: on index 1, exchanges the leading letters 0 and 1 of coordinate d."""
    s = gen_s(1, d, arity)
    return compose(inverse(s), compose(gen_tau(1, arity), s))
