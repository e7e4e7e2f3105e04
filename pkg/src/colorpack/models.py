"""Pydantic data models for colored bin packing instances and packings."""

from __future__ import annotations

import re
from collections.abc import Mapping, Sequence
from enum import Enum

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from colorpack.errors import EmptyInstanceError

ColorId = int
Bin = tuple[ColorId, ...]  # bottom to top

NAME_PATTERN = re.compile(r"[A-Za-z][A-Za-z0-9_]*")


class Mode(str, Enum):
    ZERO = "zero"
    UNIT = "unit"


class CaseTag(str, Enum):
    """Which branch of the solver (and of the closed-form count) applies."""

    EMPTY = "empty"
    SINGLE_BIN = "single-bin"
    DISCREPANCY_BOUND = "discrepancy-bound"
    UNIT_CAPACITY = "unit-capacity"
    CAPACITY_BOUND = "capacity-bound"
    ODD_REDUCIBLE = "odd-reducible"
    ODD_IRREDUCIBLE = "odd-irreducible"
    EVEN_COMBINE = "even-combine"


class ColorTable(BaseModel):
    """Interned color names; a ColorId is an index into ``names``."""

    model_config = ConfigDict(frozen=True)

    names: tuple[str, ...] = ()

    @field_validator("names")
    @classmethod
    def _check_names(cls, names: tuple[str, ...]) -> tuple[str, ...]:
        for name in names:
            if not NAME_PATTERN.fullmatch(name):
                raise ValueError(f"invalid color name {name!r}")
        if len(set(names)) != len(names):
            raise ValueError("color names must be unique")
        return names

    def __len__(self) -> int:
        return len(self.names)

    def name_of(self, color: ColorId) -> str:
        return self.names[color]

    @property
    def single_char(self) -> bool:
        """True when every name is one character, so bins print without separators."""
        return all(len(name) == 1 for name in self.names)


class Instance(BaseModel):
    """A multiset of colored items plus the bin capacity.

    Capacity 0 means zero-weight mode: items take no room and only the adjacency
    constraint binds.
    """

    model_config = ConfigDict(frozen=True)

    colors: ColorTable = Field(default_factory=ColorTable)
    counts: tuple[int, ...] = ()
    capacity: int = Field(default=0, ge=0)

    @field_validator("counts")
    @classmethod
    def _check_counts(cls, counts: tuple[int, ...]) -> tuple[int, ...]:
        if any(c < 0 for c in counts):
            raise ValueError("item counts must be non-negative")
        return counts

    @model_validator(mode="after")
    def _check_interning(self) -> Instance:
        if len(self.counts) != len(self.colors):
            raise ValueError(
                f"{len(self.counts)} counts given for {len(self.colors)} colors"
            )
        keys = [(-c, name) for c, name in zip(self.counts, self.colors.names)]
        if keys != sorted(keys):
            raise ValueError(
                "colors must be interned by descending count, ties by name "
                "(use Instance.from_counts)"
            )
        return self

    @classmethod
    def from_counts(cls, counts: Mapping[str, int], capacity: int = 0) -> Instance:
        """Build an instance from a name -> count mapping, interning colors canonically."""
        ordered = sorted(counts.items(), key=lambda item: (-item[1], item[0]))
        return cls(
            colors=ColorTable(names=tuple(name for name, _ in ordered)),
            counts=tuple(count for _, count in ordered),
            capacity=capacity,
        )

    @property
    def n(self) -> int:
        return sum(self.counts)

    @property
    def k(self) -> int:
        return len(self.counts)

    @property
    def mode(self) -> Mode:
        return Mode.ZERO if self.capacity == 0 else Mode.UNIT

    @property
    def is_zero_weight(self) -> bool:
        return self.capacity == 0

    @property
    def effective_capacity(self) -> int:
        """Bin size used by searches: n in zero-weight mode, otherwise the capacity."""
        return self.n if self.is_zero_weight else self.capacity

    @property
    def discrepancy(self) -> int:
        """MaxCount - OtherCount, defined as 0 for the empty instance."""
        n = self.n
        return 2 * max(self.counts) - n if n else 0

    def as_dict(self) -> dict[str, int]:
        return dict(zip(self.colors.names, self.counts))


class InstanceStats(BaseModel):
    model_config = ConfigDict(frozen=True)

    max_color: ColorId
    max_count: int
    other_count: int
    discrepancy: int


def stats_of_counts(counts: Sequence[int], names: Sequence[str]) -> InstanceStats:
    """Statistics for an arbitrary count vector over an interned color table.

    MaxColor ties go to the lexicographically smallest name.
    """
    n = sum(counts)
    if n == 0:
        raise EmptyInstanceError("no items to pack")
    max_color = min(range(len(counts)), key=lambda c: (-counts[c], names[c]))
    max_count = counts[max_color]
    other_count = n - max_count
    return InstanceStats(
        max_color=max_color,
        max_count=max_count,
        other_count=other_count,
        discrepancy=max_count - other_count,
    )


def compute_stats(instance: Instance) -> InstanceStats:
    return stats_of_counts(instance.counts, instance.colors.names)


class Packing(BaseModel):
    """Bins produced for an instance; validity is checked by ``validate_packing``."""

    model_config = ConfigDict(frozen=True)

    instance: Instance
    bins: tuple[Bin, ...] = ()

    @property
    def bin_count(self) -> int:
        return len(self.bins)

    def named_bins(self) -> list[list[str]]:
        names = self.instance.colors.names
        return [
            [names[c] if 0 <= c < len(names) else f"#{c}" for c in items] for items in self.bins
        ]
