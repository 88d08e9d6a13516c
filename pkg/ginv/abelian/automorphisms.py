"""Automorphisms of finitely generated abelian groups and their orbits.

Automorphisms are handled as tuples of generator images in canonical
coordinates.  Orbits of finite groups are computed by closing the element
under a generating set of Aut(T): unit scalings of each generator together
with the elementary transvections ``e_j -> e_j + (d_i / gcd(d_i, d_j)) e_i``.
For ``Z^r x T`` the orbit of ``(f, t)`` is
``{(f', psi(t) + c s) : gcd(f') = c, psi in Aut(T), s in T}`` with ``c = gcd(f)``.
"""
from __future__ import annotations

import logging
import math
from collections import deque
from collections.abc import Iterator, Sequence
from itertools import product

from sympy import primefactors

from ginv import config
from ginv.abelian.groups import FgElement, FgGroup, GroupHom, reduce_coords
from ginv.abelian.matrix import IntMatrix, unimodular_inverse
from ginv.abelian.snf import smith_normal_form
from ginv.errors import BoundExceeded

logger = logging.getLogger(__name__)

Images = tuple[tuple[int, ...], ...]


def _require_finite(t: FgGroup):
    if not t.is_finite:
        raise ValueError(f"{t} is not finite")


def _check_order(t: FgGroup, aut_bound: int | None):
    limit = aut_bound or config.AUT_BOUND
    if t.order > limit:
        raise BoundExceeded("aut-bound", t.order, limit)


def endomorphism_count(t: FgGroup) -> int:
    """|End(T)| = product of gcd(d_i, d_j) over all pairs of invariant factors."""
    return math.prod(math.gcd(a, b) for a in t.torsion for b in t.torsion)


def _image_candidates(t: FgGroup, i: int) -> list[tuple[int, ...]]:
    # Hom(Z/d_i, Z/d_j) is generated by 1 -> d_j / gcd(d_i, d_j).
    d_i = t.torsion[i]
    ranges = [range(0, d_j, d_j // math.gcd(d_i, d_j)) for d_j in t.torsion]
    return list(product(*ranges))


def _rank_mod_p(rows: list[list[int]], p: int) -> int:
    rows = [[x % p for x in row] for row in rows]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = pow(rows[rank][col], -1, p)
        for r in range(len(rows)):
            if r != rank and rows[r][col]:
                factor = rows[r][col] * inv
                rows[r] = [(x - factor * y) % p for x, y in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def is_automorphism(t: FgGroup, images: Images) -> bool:
    """An endomorphism of a finite group is bijective iff it is so on every T/pT."""
    for p in primefactors(t.order):
        block = [i for i, d in enumerate(t.torsion) if d % p == 0]
        rows = [[images[i][j] for j in block] for i in block]
        if _rank_mod_p(rows, p) < len(block):
            return False
    return True


def _as_hom(t: FgGroup, images: Images) -> GroupHom:
    return GroupHom.from_columns(t, t, images)


def enumerate_automorphisms(
    t: FgGroup, *, aut_bound: int | None = None, tuple_bound: int | None = None
) -> Iterator[GroupHom]:
    """Yield every automorphism of the finite group ``t`` exactly once."""
    _require_finite(t)
    _check_order(t, aut_bound)
    limit = tuple_bound or config.TUPLE_BOUND
    count = endomorphism_count(t)
    if count > limit:
        raise BoundExceeded("tuple-bound", count, limit)
    candidates = [_image_candidates(t, i) for i in range(len(t.torsion))]
    found = 0
    for images in product(*candidates):
        if is_automorphism(t, images):
            found += 1
            yield _as_hom(t, images)
    logger.debug("Enumerated %d automorphisms of %s among %d endomorphisms", found, t, count)


def _unit_generators(d: int) -> list[int]:
    gens: list[int] = []
    generated = {1}
    for u in range(2, d):
        if math.gcd(u, d) != 1 or u in generated:
            continue
        gens.append(u)
        frontier = list(generated)
        while frontier:
            x = frontier.pop()
            for g in gens:
                y = x * g % d
                if y not in generated:
                    generated.add(y)
                    frontier.append(y)
    return gens


def automorphism_generators(t: FgGroup) -> list[Images]:
    """A generating set of Aut(t) for finite ``t``."""
    _require_finite(t)
    n = len(t.torsion)
    identity = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    result: list[Images] = []
    for i, d in enumerate(t.torsion):
        for u in _unit_generators(d):
            images = list(identity)
            images[i] = tuple(u if j == i else 0 for j in range(n))
            result.append(tuple(images))
    for i, d_i in enumerate(t.torsion):
        for j, d_j in enumerate(t.torsion):
            if i != j:
                images = list(identity)
                images[j] = tuple(
                    1 if k == j else d_i // math.gcd(d_i, d_j) if k == i else 0
                    for k in range(n)
                )
                result.append(tuple(images))
    return result


def _apply(t: FgGroup, images: Images, coords: Sequence[int]) -> tuple[int, ...]:
    total = [0] * len(t.torsion)
    for c, image in zip(coords, images):
        if c:
            for k, x in enumerate(image):
                total[k] += c * x
    return reduce_coords(t.torsion, total)


def _compose(t: FgGroup, outer: Images, inner: Images) -> Images:
    return tuple(_apply(t, outer, image) for image in inner)


class TorsionOrbit:
    """Orbit of a point of a finite group under Aut, with a witness for each member."""

    def __init__(self, t: FgGroup, start: Sequence[int], *, aut_bound: int | None = None):
        _require_finite(t)
        _check_order(t, aut_bound)
        self.group = t
        self.start = tuple(start)
        self.generators = automorphism_generators(t)
        self._parent: dict[tuple[int, ...], tuple[tuple[int, ...], int] | None] = {self.start: None}
        queue = deque([self.start])
        while queue:
            x = queue.popleft()
            for k, gen in enumerate(self.generators):
                y = _apply(t, gen, x)
                if y not in self._parent:
                    self._parent[y] = (x, k)
                    queue.append(y)
        logger.debug("Orbit of %s in %s has %d elements", self.start, t, len(self._parent))

    def __contains__(self, coords) -> bool:
        return tuple(coords) in self._parent

    def __len__(self) -> int:
        return len(self._parent)

    def __iter__(self) -> Iterator[tuple[int, ...]]:
        return iter(self._parent)

    def witness(self, coords: Sequence[int]) -> Images:
        """Images of an automorphism carrying the start point to ``coords``."""
        n = len(self.group.torsion)
        images: Images = tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
        step = self._parent[tuple(coords)]
        while step is not None:
            x, k = step
            images = _compose(self.group, images, self.generators[k])
            step = self._parent[x]
        return images


def orbit(g: FgGroup, a: FgElement, *, aut_bound: int | None = None) -> list[FgElement]:
    """All elements in the Aut-orbit of ``a`` in the finite group ``g``."""
    return [g.element(x) for x in TorsionOrbit(g, a.coords, aut_bound=aut_bound)]


def _solve_multiple(t: FgGroup, z: Sequence[int], c: int) -> tuple[int, ...] | None:
    """Some s with c*s == z in t, or None when z is not in c*t."""
    s = []
    for zi, d in zip(z, t.torsion):
        g = math.gcd(c, d)
        if zi % g:
            return None
        m = d // g
        s.append(zi // g * pow(c // g, -1, m) % m if m > 1 else 0)
    return tuple(s)


def _basis_with_first_column(p: Sequence[int]) -> IntMatrix:
    """A unimodular matrix whose first column is the primitive vector ``p``."""
    snf = smith_normal_form(IntMatrix.column(p))
    # u p v = e_1 with v = [+-1], so p = v * u^-1 e_1.
    basis = unimodular_inverse(snf.u).to_rows()
    sign = snf.v[0, 0]
    for row in basis:
        row[0] *= sign
    return IntMatrix.from_rows(basis)


def find_automorphism(
    g: FgGroup, a: FgElement, b: FgElement, *, aut_bound: int | None = None
) -> GroupHom | None:
    """An automorphism of ``g`` carrying ``a`` to ``b``, or None if there is none."""
    if a.group != g or b.group != g:
        raise ValueError("Elements outside the group")
    r = g.free_rank
    t = g.torsion_part()
    c = a.content
    if c != b.content:
        return None

    ta, tb = a.torsion_coords, b.torsion_coords
    psi = None
    s: tuple[int, ...] = ()
    if t.is_trivial:
        psi = ()
    elif c == 0:
        torsion_orbit = TorsionOrbit(t, ta, aut_bound=aut_bound)
        if tb in torsion_orbit:
            psi = torsion_orbit.witness(tb)
    else:
        torsion_orbit = TorsionOrbit(t, ta, aut_bound=aut_bound)
        for x in torsion_orbit:
            s = _solve_multiple(t, [y - z for y, z in zip(tb, x)], c)
            if s is not None:
                psi = torsion_orbit.witness(x)
                break
    if psi is None:
        return None

    columns: list[tuple[int, ...]] = []
    if r:
        if c == 0:
            m = IntMatrix.identity(r)
            h_coeffs = [0] * r
        else:
            p_a = _basis_with_first_column([x // c for x in a.free_coords])
            p_b = _basis_with_first_column([x // c for x in b.free_coords])
            p_a_inv = unimodular_inverse(p_a)
            m = p_b @ p_a_inv
            h_coeffs = list(p_a_inv.row(0))
        for j in range(r):
            torsion_image = [h_coeffs[j] * x for x in s] if s else [0] * len(t.torsion)
            columns.append(m.col(j) + tuple(torsion_image))
    for image in psi:
        columns.append((0,) * r + image)
    return GroupHom.from_columns(g, g, columns)


def aut_orbit_equivalent(g: FgGroup, a: FgElement, b: FgElement, *, aut_bound: int | None = None) -> bool:
    """True iff some automorphism of ``g`` maps ``a`` to ``b``."""
    return find_automorphism(g, a, b, aut_bound=aut_bound) is not None
