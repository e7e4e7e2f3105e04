"""Alternating packer for zero-weight items.

Without weights only the adjacency constraint binds, so a multiset fits in one
bin exactly when its discrepancy (MaxCount - OtherCount) is at most 0. Otherwise
the discrepancy itself is the optimal number of bins.
"""

from __future__ import annotations

import heapq
import logging
from collections.abc import Sequence

from colorpack.errors import InfeasibleSequenceError, StuckAlternationError, WrongModeError
from colorpack.models import Bin, ColorId, Instance, Packing, compute_stats, stats_of_counts

log = logging.getLogger(__name__)


def other_items(counts: Sequence[int], max_color: ColorId) -> list[ColorId]:
    """Every non-MaxColor item, grouped by color in interning order."""
    items: list[ColorId] = []
    for color, count in enumerate(counts):
        if color != max_color:
            items.extend([color] * count)
    return items


def interleave(max_color: ColorId, others: Sequence[ColorId]) -> list[ColorId]:
    """MaxColor, o1, MaxColor, o2, ..., MaxColor: starts and ends with MaxColor."""
    sequence = [max_color] * (2 * len(others) + 1)
    sequence[1::2] = others
    return sequence


class AlternationState:
    """Greedy alternation over OtherColors items.

    Each step places the color with the largest remaining count that differs
    from the current top, ties going to the lower ColorId (interning order).
    """

    def __init__(self, counts: Sequence[int], exclude: ColorId) -> None:
        self.remaining = list(counts)
        self.remaining[exclude] = 0
        self.top: ColorId | None = None
        self._heap = [(-c, color) for color, c in enumerate(self.remaining) if c]
        heapq.heapify(self._heap)

    def place_next(self) -> ColorId:
        if not self._heap:
            raise StuckAlternationError("no OtherColors items left to alternate")
        first = heapq.heappop(self._heap)
        if first[1] == self.top:
            if not self._heap:
                heapq.heappush(self._heap, first)
                raise StuckAlternationError(
                    f"only color {self.top} remains and it is already on top"
                )
            chosen = heapq.heappop(self._heap)
            heapq.heappush(self._heap, first)
        else:
            chosen = first
        neg_count, color = chosen
        if neg_count < -1:
            heapq.heappush(self._heap, (neg_count + 1, color))
        self.remaining[color] -= 1
        self.top = color
        return color


def zero_sequence(counts: Sequence[int], names: Sequence[str]) -> list[ColorId]:
    """Lay out all items as one sequence with no two equal colors adjacent.

    Phase 1 alternates OtherColors items until one fewer of them than MaxColor
    items remains; phase 2 interleaves MaxColor with the rest, starting and
    ending with MaxColor.
    """
    if sum(counts) == 0:
        return []
    stats = stats_of_counts(counts, names)
    if stats.discrepancy > 0:
        raise InfeasibleSequenceError(
            f"discrepancy {stats.discrepancy} > 0: items do not fit one sequence"
        )

    state = AlternationState(counts, exclude=stats.max_color)
    phase_one = stats.other_count - (stats.max_count - 1)
    sequence = [state.place_next() for _ in range(phase_one)]

    rest = other_items(state.remaining, stats.max_color)
    if len(rest) != stats.max_count - 1:
        raise StuckAlternationError(
            f"{len(rest)} OtherColors items left for {stats.max_count} MaxColor items"
        )
    sequence.extend(interleave(stats.max_color, rest))
    return sequence


def pack_zero(instance: Instance) -> Packing:
    """Optimal packing of zero-weight items: max(1, discrepancy) bins."""
    if not instance.is_zero_weight:
        raise WrongModeError(
            f"pack_zero needs a zero-weight instance, got capacity {instance.capacity}"
        )
    if instance.n == 0:
        return Packing(instance=instance)

    stats = compute_stats(instance)
    log.debug(
        "Zero-weight: MaxColor=%s MaxCount=%d OtherCount=%d D=%d",
        instance.colors.name_of(stats.max_color),
        stats.max_count,
        stats.other_count,
        stats.discrepancy,
    )
    if stats.discrepancy <= 0:
        bins: list[Bin] = [tuple(zero_sequence(instance.counts, instance.colors.names))]
    else:
        first = interleave(stats.max_color, other_items(instance.counts, stats.max_color))
        singles = [(stats.max_color,)] * (stats.discrepancy - 1)
        bins = [tuple(first), *singles]
    return Packing(instance=instance, bins=tuple(bins))
