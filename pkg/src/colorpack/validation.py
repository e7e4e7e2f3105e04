"""Check a packing against the adjacency, capacity and conservation constraints."""

from __future__ import annotations

import logging
from collections import Counter
from enum import Enum
from itertools import chain

from pydantic import BaseModel, ConfigDict, Field

from colorpack.models import ColorId, ColorTable, Instance, Packing

log = logging.getLogger(__name__)


class ViolationKind(str, Enum):
    ADJACENCY = "adjacency"
    CAPACITY = "capacity"
    CONSERVATION = "conservation"
    EMPTY_BIN = "empty-bin"


class Violation(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: ViolationKind
    bin_index: int | None = None
    position: int | None = None  # index of the second of two equal neighbours
    length: int | None = None
    color: ColorId | None = None
    expected: int | None = None
    found: int | None = None

    def describe(self, colors: ColorTable) -> str:
        if self.kind is ViolationKind.ADJACENCY:
            return f"bin {self.bin_index}: equal colors adjacent at position {self.position}"
        if self.kind is ViolationKind.CAPACITY:
            return f"bin {self.bin_index}: {self.length} items over capacity"
        if self.kind is ViolationKind.EMPTY_BIN:
            return f"bin {self.bin_index}: empty"
        assert self.color is not None
        name = colors.name_of(self.color) if 0 <= self.color < len(colors) else f"#{self.color}"
        return f"color {name}: expected {self.expected} items, found {self.found}"


class ValidationReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    violations: tuple[Violation, ...] = Field(default_factory=tuple)

    @property
    def valid(self) -> bool:
        return not self.violations

    def kinds(self) -> set[ViolationKind]:
        return {v.kind for v in self.violations}


def validate_packing(instance: Instance, packing: Packing) -> ValidationReport:
    """List every constraint the packing breaks. An empty list means it is valid."""
    violations: list[Violation] = []
    capacity = instance.capacity

    for index, items in enumerate(packing.bins):
        if not items:
            violations.append(Violation(kind=ViolationKind.EMPTY_BIN, bin_index=index))
            continue
        if capacity and len(items) > capacity:
            violations.append(
                Violation(kind=ViolationKind.CAPACITY, bin_index=index, length=len(items))
            )
        for position in range(1, len(items)):
            if items[position] == items[position - 1]:
                violations.append(
                    Violation(kind=ViolationKind.ADJACENCY, bin_index=index, position=position)
                )

    found = Counter(chain.from_iterable(packing.bins))
    for color, expected in enumerate(instance.counts):
        if found.get(color, 0) != expected:
            violations.append(
                Violation(
                    kind=ViolationKind.CONSERVATION,
                    color=color,
                    expected=expected,
                    found=found.get(color, 0),
                )
            )
    for color in sorted(c for c in found if not 0 <= c < instance.k):
        violations.append(
            Violation(kind=ViolationKind.CONSERVATION, color=color, expected=0, found=found[color])
        )

    if violations:
        log.debug("Packing has %d violation(s)", len(violations))
    return ValidationReport(violations=tuple(violations))
