from __future__ import annotations

from pydantic import BaseModel, ConfigDict, model_validator

from ginv.abelian.groups import FgElement, FgGroup, direct_sum


class GradedGroups(BaseModel):
    """Finitely supported family of groups indexed by degree, with a unit class in degree 0.

    Trivial groups are dropped from ``groups`` except in degree 0, which is
    always present.
    """

    model_config = ConfigDict(frozen=True)

    groups: dict[int, FgGroup]
    unit_class: FgElement

    @model_validator(mode="before")
    @classmethod
    def _normalise(cls, data):
        if isinstance(data, dict) and "groups" in data:
            groups = {int(n): FgGroup.model_validate(g) for n, g in data["groups"].items()}
            if any(n < 0 for n in groups):
                raise ValueError("Degrees must be non-negative")
            groups.setdefault(0, FgGroup())
            data = dict(data, groups={
                n: g for n, g in sorted(groups.items()) if n == 0 or not g.is_trivial
            })
        return data

    @model_validator(mode="after")
    def _check_unit(self):
        if self.unit_class.group != self.groups[0]:
            raise ValueError("Unit class must live in degree 0")
        return self

    def __getitem__(self, n: int) -> FgGroup:
        return self.groups.get(n, FgGroup())

    @property
    def degrees(self) -> list[int]:
        """Degrees carrying a nontrivial group."""
        return [n for n, g in self.groups.items() if not g.is_trivial]

    @property
    def top_degree(self) -> int:
        return max(self.groups)

    def same_groups(self, other: GradedGroups) -> bool:
        return all(self[n] == other[n] for n in set(self.groups) | set(other.groups))

    def even_part(self) -> FgGroup:
        return direct_sum(*(g for n, g in self.groups.items() if n % 2 == 0))

    def odd_part(self) -> FgGroup:
        return direct_sum(*(g for n, g in self.groups.items() if n % 2 == 1))
