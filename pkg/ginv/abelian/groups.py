"""Finitely generated abelian groups in invariant-factor form.

A group is stored as ``Z^r x Z/d1 x ... x Z/ds`` with ``d1 | d2 | ... | ds``
and every ``di >= 2``.  This form is canonical: two groups are isomorphic
exactly when their fields are equal.  Elements carry coordinates with
respect to the canonical generators, free generators first.

>>> FgGroup.from_cyclic_orders([0, 4, 6])
FgGroup(free_rank=1, torsion=(2, 12))
>>> print(tensor(FgGroup.cyclic(4), FgGroup.cyclic(6)).group)
Z/2
"""
from __future__ import annotations

import math
from collections import defaultdict
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from itertools import zip_longest

from pydantic import BaseModel, ConfigDict, model_validator
from sympy import factorint

from ginv.abelian.matrix import IntMatrix
from ginv.abelian.snf import smith_normal_form


class FgGroup(BaseModel):
    model_config = ConfigDict(frozen=True)

    free_rank: int = 0
    torsion: tuple[int, ...] = ()

    @model_validator(mode="after")
    def _check_chain(self):
        if self.free_rank < 0:
            raise ValueError("free_rank must be non-negative")
        for d in self.torsion:
            if d < 2:
                raise ValueError(f"Invariant factor {d} is not >= 2")
        for d, e in zip(self.torsion, self.torsion[1:]):
            if e % d:
                raise ValueError(f"Invariant factors {self.torsion} do not form a divisibility chain")
        return self

    @classmethod
    def trivial(cls) -> FgGroup:
        return cls()

    @classmethod
    def free(cls, rank: int) -> FgGroup:
        return cls(free_rank=rank)

    @classmethod
    def cyclic(cls, order: int) -> FgGroup:
        """Z/order, where order 0 means Z and order 1 the trivial group."""
        return cls.from_cyclic_orders([order])

    @classmethod
    def from_cyclic_orders(cls, orders: Iterable[int]) -> FgGroup:
        """Canonical form of the direct sum of Z/m over ``orders`` (m = 0 is Z)."""
        exponents = defaultdict(list)
        rank = 0
        for m in orders:
            m = abs(int(m))
            if m == 0:
                rank += 1
            elif m > 1:
                for p, e in factorint(m).items():
                    exponents[int(p)].append(int(e))
        columns = [
            [p ** e for e in sorted(e_list, reverse=True)]
            for p, e_list in sorted(exponents.items())
        ]
        factors = [math.prod(c) for c in zip_longest(*columns, fillvalue=1)]
        return cls(free_rank=rank, torsion=tuple(sorted(factors)))

    @property
    def ngens(self) -> int:
        return self.free_rank + len(self.torsion)

    @property
    def orders(self) -> tuple[int, ...]:
        """Order of each canonical generator, 0 for free generators."""
        return (0,) * self.free_rank + self.torsion

    @property
    def is_finite(self) -> bool:
        return self.free_rank == 0

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    @property
    def order(self) -> int | None:
        return math.prod(self.torsion) if self.is_finite else None

    @property
    def exponent(self) -> int:
        """Exponent of the torsion subgroup."""
        return self.torsion[-1] if self.torsion else 1

    def torsion_part(self) -> FgGroup:
        return FgGroup(torsion=self.torsion)

    def primary_factors(self) -> list[int]:
        """Elementary divisors (prime powers) preceded by a 0 for each free summand."""
        result = [0] * self.free_rank
        for d in self.torsion:
            result.extend(int(p) ** int(e) for p, e in sorted(factorint(d).items()))
        return result

    def has_z2_summand(self) -> bool:
        return any(d % 4 == 2 for d in self.torsion)

    def zero(self) -> FgElement:
        return self.element([0] * self.ngens)

    def element(self, coords: Sequence[int]) -> FgElement:
        """The element with the given coordinates, reduced modulo the invariant factors."""
        coords = reduce_coords(self.orders, coords)
        return FgElement(
            group=self,
            free_coords=coords[:self.free_rank],
            torsion_coords=coords[self.free_rank:],
        )

    def generators(self) -> list[FgElement]:
        n = self.ngens
        return [self.element([int(i == j) for j in range(n)]) for i in range(n)]

    def __str__(self) -> str:
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z/{d}" for d in self.torsion)
        return " x ".join(parts) if parts else "0"


def reduce_coords(orders: Sequence[int], coords: Sequence[int]) -> tuple[int, ...]:
    if len(coords) != len(orders):
        raise ValueError(f"Expected {len(orders)} coordinates, got {len(coords)}")
    return tuple(int(c) % m if m else int(c) for c, m in zip(coords, orders))


class FgElement(BaseModel):
    model_config = ConfigDict(frozen=True)

    group: FgGroup
    free_coords: tuple[int, ...] = ()
    torsion_coords: tuple[int, ...] = ()

    @model_validator(mode="after")
    def _check_coords(self):
        if len(self.free_coords) != self.group.free_rank:
            raise ValueError("Wrong number of free coordinates")
        if len(self.torsion_coords) != len(self.group.torsion):
            raise ValueError("Wrong number of torsion coordinates")
        for c, d in zip(self.torsion_coords, self.group.torsion):
            if not 0 <= c < d:
                raise ValueError(f"Torsion coordinate {c} not reduced modulo {d}")
        return self

    @property
    def coords(self) -> tuple[int, ...]:
        return self.free_coords + self.torsion_coords

    @property
    def content(self) -> int:
        """gcd of the free coordinates (0 for a torsion element)."""
        return math.gcd(*self.free_coords) if self.free_coords else 0

    @property
    def is_zero(self) -> bool:
        return not any(self.coords)

    @property
    def order(self) -> int | None:
        if any(self.free_coords):
            return None
        return math.lcm(*(d // math.gcd(c, d) for c, d in zip(self.torsion_coords, self.group.torsion)))

    def __add__(self, other: FgElement) -> FgElement:
        if other.group != self.group:
            raise ValueError("Elements of different groups")
        return self.group.element([a + b for a, b in zip(self.coords, other.coords)])

    def __neg__(self) -> FgElement:
        return self.group.element([-a for a in self.coords])

    def __sub__(self, other: FgElement) -> FgElement:
        return self + (-other)

    def __rmul__(self, n: int) -> FgElement:
        return self.group.element([n * a for a in self.coords])

    def __str__(self) -> str:
        return f"({', '.join(map(str, self.coords))}) in {self.group}"


class GroupHom(BaseModel):
    """Homomorphism given by the images of the canonical generators of the domain."""

    model_config = ConfigDict(frozen=True)

    domain: FgGroup
    codomain: FgGroup
    images: tuple[FgElement, ...]

    @model_validator(mode="after")
    def _check_images(self):
        if len(self.images) != self.domain.ngens:
            raise ValueError("One image per generator of the domain is required")
        for image, order in zip(self.images, self.domain.orders):
            if image.group != self.codomain:
                raise ValueError("Image outside the codomain")
            if order and not (order * image).is_zero:
                raise ValueError(f"Image {image} is not killed by {order}")
        return self

    @classmethod
    def identity(cls, group: FgGroup) -> GroupHom:
        return cls(domain=group, codomain=group, images=tuple(group.generators()))

    @classmethod
    def from_columns(cls, domain: FgGroup, codomain: FgGroup, columns: Sequence[Sequence[int]]) -> GroupHom:
        return cls(domain=domain, codomain=codomain, images=tuple(codomain.element(c) for c in columns))

    def apply_coords(self, coords: Sequence[int]) -> tuple[int, ...]:
        total = [0] * self.codomain.ngens
        for c, image in zip(coords, self.images):
            if c:
                for k, x in enumerate(image.coords):
                    total[k] += c * x
        return reduce_coords(self.codomain.orders, total)

    def __call__(self, x: FgElement) -> FgElement:
        if x.group != self.domain:
            raise ValueError("Element outside the domain")
        return self.codomain.element(self.apply_coords(x.coords))

    def compose(self, inner: GroupHom) -> GroupHom:
        """self after inner."""
        if inner.codomain != self.domain:
            raise ValueError("Homomorphisms are not composable")
        return GroupHom(domain=inner.domain, codomain=self.codomain,
                        images=tuple(self(x) for x in inner.images))

    def is_surjective(self) -> bool:
        relations = [list(image.coords) for image in self.images]
        for k, m in enumerate(self.codomain.orders):
            if m:
                relations.append([m if i == k else 0 for i in range(self.codomain.ngens)])
        if not relations:
            return True
        columns = IntMatrix.from_rows(relations).transpose()
        group, _ = cokernel(columns)
        return group.is_trivial

    def is_isomorphism(self) -> bool:
        # Finitely generated abelian groups are Hopfian.
        return self.domain == self.codomain and self.is_surjective()


@dataclass(frozen=True)
class QuotientMap:
    """Map from Z^N onto a canonical cokernel, read off an SNF change of basis."""

    group: FgGroup
    u: IntMatrix
    diagonal: tuple[int, ...]

    def coords(self, vector: Sequence[int]) -> tuple[int, ...]:
        y = self.u.apply(vector)
        free = [c for c, d in zip(y, self.diagonal) if d == 0]
        torsion = [c for c, d in zip(y, self.diagonal) if d > 1]
        return reduce_coords(self.group.orders, free + torsion)

    def __call__(self, vector: Sequence[int]) -> FgElement:
        return self.group.element(self.coords(vector))


def cokernel(m: IntMatrix) -> tuple[FgGroup, QuotientMap]:
    """Z^rows / m Z^cols in canonical form together with the quotient map."""
    snf = smith_normal_form(m)
    diagonal = snf.diagonal + (0,) * (m.rows - len(snf.diagonal))
    group = FgGroup(
        free_rank=sum(1 for d in diagonal if d == 0),
        torsion=tuple(d for d in diagonal if d > 1),
    )
    return group, QuotientMap(group=group, u=snf.u, diagonal=diagonal)


def presentation(orders: Sequence[int]) -> tuple[FgGroup, QuotientMap]:
    """Canonical form of the direct sum of Z/m over ``orders`` with coordinates map."""
    return cokernel(IntMatrix.diagonal(orders))


class KernelResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    group: FgGroup
    basis: tuple[tuple[int, ...], ...]


def kernel_group(m: IntMatrix) -> KernelResult:
    """The free group {x : m x = 0} with an explicit integer basis."""
    snf = smith_normal_form(m)
    basis = tuple(snf.v.col(j) for j in range(snf.rank, m.cols))
    return KernelResult(group=FgGroup.free(len(basis)), basis=basis)


def direct_sum(*groups: FgGroup) -> FgGroup:
    return FgGroup.from_cyclic_orders(m for g in groups for m in g.orders)


@dataclass(frozen=True)
class TensorProduct:
    """g (x) h together with the bilinear map (a, b) -> a (x) b."""

    left: FgGroup
    right: FgGroup
    group: FgGroup
    quotient: QuotientMap

    def coords(self, a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
        return self.quotient.coords([x * y for x in a for y in b])

    def __call__(self, a: FgElement, b: FgElement) -> FgElement:
        if a.group != self.left or b.group != self.right:
            raise ValueError("Elements outside the tensor factors")
        return self.group.element(self.coords(a.coords, b.coords))


def tensor(g: FgGroup, h: FgGroup) -> TensorProduct:
    # Z/m (x) Z/n = Z/gcd(m, n) with Z = Z/0.
    group, quotient = presentation([math.gcd(m, n) for m in g.orders for n in h.orders])
    return TensorProduct(left=g, right=h, group=group, quotient=quotient)


def tor(g: FgGroup, h: FgGroup) -> FgGroup:
    return FgGroup.from_cyclic_orders(math.gcd(m, n) for m in g.torsion for n in h.torsion)


def ext_group(g: FgGroup, h: FgGroup) -> FgGroup:
    """Ext(g, h): Ext(Z, -) = 0, Ext(Z/m, Z) = Z/m, Ext(Z/m, Z/n) = Z/gcd(m, n)."""
    return FgGroup.from_cyclic_orders(math.gcd(m, n) if n else m for m in g.torsion for n in h.orders)


def hom_group(g: FgGroup, h: FgGroup) -> FgGroup:
    """Hom(g, h): Hom(Z, Z/n) = Z/n, Hom(Z/m, Z) = 0, Hom(Z/m, Z/n) = Z/gcd(m, n)."""
    orders = []
    for m in g.orders:
        for n in h.orders:
            if m == 0:
                orders.append(n)
            elif n:
                orders.append(math.gcd(m, n))
    return FgGroup.from_cyclic_orders(orders)
