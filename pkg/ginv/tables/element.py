"""Prefix-table maps on Z_{n,k} x N.

A point of Z_{n,k} x N is a tuple of n one-sided sequences together with a
positive index; sequence d is over the alphabet {0, ..., k(d) - 1}.  A brick
is the set of points whose sequences start with given words at a given
index.  A :class:`TableElement` maps each source brick onto its target
brick by replacing prefixes, and translates every index beyond ``bound``
by ``offset``.
"""
from __future__ import annotations

import logging
from collections import defaultdict
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from math import prod

from ginv import config
from ginv.errors import IncompatibleParameters, RefinementDepthExceeded

logger = logging.getLogger(__name__)

Words = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class Brick:
    words: Words
    index: int

    @classmethod
    def full(cls, n: int, index: int) -> Brick:
        return cls(((),) * n, index)

    @property
    def depth(self) -> int:
        return max((len(w) for w in self.words), default=0)

    def mass(self, arity: Sequence[int]) -> Fraction:
        return Fraction(1, prod(k ** len(w) for k, w in zip(arity, self.words)))

    def overlaps(self, other: Brick) -> bool:
        return self.index == other.index and all(
            a[:len(b)] == b or b[:len(a)] == a for a, b in zip(self.words, other.words)
        )

    def contains(self, other: Brick) -> bool:
        """True iff ``other`` is a sub-brick of this brick."""
        return self.index == other.index and all(b[:len(a)] == a for a, b in zip(self.words, other.words))

    def meet(self, other: Brick) -> Brick | None:
        if not self.overlaps(other):
            return None
        return Brick(tuple(a if len(a) >= len(b) else b for a, b in zip(self.words, other.words)), self.index)

    def suffixes(self, sub: Brick) -> Words:
        """The words to append to this brick's words to obtain the sub-brick ``sub``."""
        return tuple(b[len(a):] for a, b in zip(self.words, sub.words))

    def extend(self, suffixes: Words) -> Brick:
        return Brick(tuple(a + s for a, s in zip(self.words, suffixes)), self.index)

    def moved(self, index: int) -> Brick:
        return Brick(self.words, index)

    def __str__(self) -> str:
        return "(" + ", ".join("".join(map(str, w)) or "-" for w in self.words) + f"; {self.index})"


Entry = tuple[Brick, Brick]


@dataclass(frozen=True)
class TableElement:
    arity: tuple[int, ...]
    bound: int
    offset: int
    table: tuple[Entry, ...]

    @property
    def n(self) -> int:
        return len(self.arity)

    @classmethod
    def identity(cls, arity: Sequence[int]) -> TableElement:
        return cls(tuple(arity), 0, 0, ())

    def check_well_formed(self):
        """Raise ValueError unless sources and targets are brick partitions of the right index ranges."""
        if self.bound < 0 or self.bound + self.offset < 0:
            raise ValueError(f"Invalid bound {self.bound} with offset {self.offset}")
        for src, tgt in self.table:
            for brick in (src, tgt):
                if len(brick.words) != self.n:
                    raise ValueError(f"Brick {brick} has the wrong dimension")
                for k, w in zip(self.arity, brick.words):
                    if any(not 0 <= a < k for a in w):
                        raise ValueError(f"Brick {brick} uses a letter outside its alphabet")
        _check_partition([src for src, _ in self.table], self.bound, self.arity, "source")
        _check_partition([tgt for _, tgt in self.table], self.bound + self.offset, self.arity, "target")

    def is_well_formed(self) -> bool:
        try:
            self.check_well_formed()
        except ValueError:
            return False
        return True

    def by_source_index(self) -> dict[int, list[Entry]]:
        levels: dict[int, list[Entry]] = defaultdict(list)
        for entry in self.table:
            levels[entry[0].index].append(entry)
        return levels

    def lifted(self, bound: int) -> TableElement:
        """The same map with its table extended by translation entries up to ``bound``."""
        if bound <= self.bound:
            return self
        extra = tuple(
            (Brick.full(self.n, j), Brick.full(self.n, j + self.offset))
            for j in range(self.bound + 1, bound + 1)
        )
        return TableElement(self.arity, bound, self.offset, self.table + extra)

    def image(self, point: Brick) -> Brick:
        """Image of a point given by long enough prefixes (or of a brick inside one source)."""
        if point.index > self.bound:
            return point.moved(point.index + self.offset)
        for src, tgt in self.table:
            if src.contains(point):
                return tgt.extend(src.suffixes(point))
        raise ValueError(f"{point} is not contained in a single source brick")

    def __call__(self, words: Iterable[Sequence[int]], index: int) -> tuple[Words, int]:
        image = self.image(Brick(tuple(tuple(w) for w in words), index))
        return image.words, image.index

    def __str__(self) -> str:
        rows = [f"{src} -> {tgt}" for src, tgt in self.table]
        return f"bound={self.bound} offset={self.offset} [" + "; ".join(rows) + "]"


def _check_partition(bricks: list[Brick], top: int, arity: Sequence[int], role: str):
    levels: dict[int, list[Brick]] = defaultdict(list)
    for b in bricks:
        if not 1 <= b.index <= top:
            raise ValueError(f"{role} brick {b} outside indices 1..{top}")
        levels[b.index].append(b)
    for j in range(1, top + 1):
        level = levels.get(j, [])
        if sum((b.mass(arity) for b in level), Fraction(0)) != 1:
            raise ValueError(f"{role} bricks at index {j} do not cover it")
        for x in range(len(level)):
            for y in range(x + 1, len(level)):
                if level[x].overlaps(level[y]):
                    raise ValueError(f"{role} bricks {level[x]} and {level[y]} overlap")


def _require_compatible(f: TableElement, g: TableElement):
    if f.arity != g.arity:
        raise IncompatibleParameters(f"Elements over arities {f.arity} and {g.arity}")


def _check_depth(brick: Brick, max_depth: int):
    if brick.depth > max_depth:
        raise RefinementDepthExceeded(f"Refinement produced a word of length {brick.depth} > {max_depth}")


def compose(f: TableElement, g: TableElement, *, max_depth: int | None = None) -> TableElement:
    """f after g."""
    _require_compatible(f, g)
    max_depth = max_depth or config.REFINE_DEPTH
    g = g.lifted(max(g.bound, f.bound - g.offset))
    f_levels = f.by_source_index()
    table: list[Entry] = []
    for src, tgt in g.table:
        if tgt.index > f.bound:
            table.append((src, tgt.moved(tgt.index + f.offset)))
            continue
        for f_src, f_tgt in f_levels.get(tgt.index, ()):
            common = tgt.meet(f_src)
            if common is None:
                continue
            new_src = src.extend(tgt.suffixes(common))
            new_tgt = f_tgt.extend(f_src.suffixes(common))
            _check_depth(new_src, max_depth)
            _check_depth(new_tgt, max_depth)
            table.append((new_src, new_tgt))
    return TableElement(f.arity, g.bound, f.offset + g.offset, tuple(table))


def inverse(f: TableElement) -> TableElement:
    return TableElement(f.arity, f.bound + f.offset, -f.offset, tuple((tgt, src) for src, tgt in f.table))


def equal(f: TableElement, g: TableElement) -> bool:
    """True iff ``f`` and ``g`` define the same map of Z_{n,k} x N."""
    _require_compatible(f, g)
    if f.offset != g.offset:
        return False
    bound = max(f.bound, g.bound)
    g_levels = g.lifted(bound).by_source_index()
    for f_src, f_tgt in f.lifted(bound).table:
        for g_src, g_tgt in g_levels.get(f_src.index, ()):
            common = f_src.meet(g_src)
            if common is None:
                continue
            if f_tgt.extend(f_src.suffixes(common)) != g_tgt.extend(g_src.suffixes(common)):
                return False
    return True


def shift(f: TableElement, m: int) -> TableElement:
    """Conjugate of ``f`` by the index translation j -> j + m: fixes indices <= m."""
    if m < 0:
        raise ValueError("Shift must be non-negative")
    head = tuple((Brick.full(f.n, j), Brick.full(f.n, j)) for j in range(1, m + 1))
    moved = tuple((src.moved(src.index + m), tgt.moved(tgt.index + m)) for src, tgt in f.table)
    return TableElement(f.arity, f.bound + m, f.offset, head + moved)


def in_full_group(f: TableElement, r: int) -> bool:
    """True iff ``f`` fixes every point with index > r (and so permutes Z_{n,k} x {1..r})."""
    if f.offset != 0:
        return False
    for src, tgt in f.lifted(r).table:
        if src.index > r and src != tgt:
            return False
        if src.index <= r < tgt.index:
            return False
    return True
