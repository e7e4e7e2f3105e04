"""Alternating packer for unit-weight items with a bin capacity L, plus Combine."""

from __future__ import annotations

import logging
from collections import Counter, deque
from collections.abc import Sequence
from enum import Enum
from itertools import chain

from colorpack.errors import CombineContractError, WrongModeError
from colorpack.models import Bin, ColorId, Instance, Packing, compute_stats
from colorpack.zero_weight import interleave, other_items, zero_sequence

log = logging.getLogger(__name__)


class BinClass(str, Enum):
    M = "M"  # a single MaxColor item
    P = "P"  # MaxColor on top, room for at least two more items
    F = "F"  # full, OtherColors item on top
    PARTIAL = "partial"  # MaxColor on top, room for exactly one more item
    COMBINED = "combined"


def classify_bin(items: Sequence[ColorId], capacity: int, max_color: ColorId) -> BinClass | None:
    if not items:
        return None
    top = items[-1]
    if len(items) == 1 and top == max_color:
        return BinClass.M
    if len(items) == capacity and top != max_color:
        return BinClass.F
    if top == max_color and any(c != max_color for c in items):
        free = capacity - len(items)
        if free >= 2:
            return BinClass.P
        if free == 1:
            return BinClass.PARTIAL
    return None


def split_sequence(sequence: Sequence[ColorId], capacity: int) -> list[Bin]:
    """Cut a sequence into consecutive bins of ``capacity`` items (the last may be shorter)."""
    return [tuple(sequence[i : i + capacity]) for i in range(0, len(sequence), capacity)]


def _alternating_bin(max_color: ColorId, chunk: Sequence[ColorId], capacity: int) -> Bin:
    """MaxColor first, alternating with ``chunk``; topped with MaxColor unless that overfills."""
    items = interleave(max_color, chunk)
    if len(items) > capacity:
        items.pop()
    return tuple(items)


def _alternating_bins(
    max_color: ColorId, others: Sequence[ColorId], capacity: int, limit: int | None = None
) -> tuple[list[Bin], int]:
    """Fill bins alternately until OtherColors (or ``limit`` bins) run out.

    Returns the bins and the number of OtherColors items they hold.
    """
    per_bin = capacity // 2
    stop = len(others) if limit is None else min(len(others), limit * per_bin)
    bins = [
        _alternating_bin(max_color, others[i : min(i + per_bin, stop)], capacity)
        for i in range(0, stop, per_bin)
    ]
    return bins, stop


def combine(
    bins: Sequence[Bin], capacity: int, max_color: ColorId | None = None
) -> list[Bin]:
    """Merge single-MaxColor bins using the OtherColors items that top full bins.

    Each step either closes a current bin that cannot take two more items and
    promotes the next M-bin to current, or moves the top item of one F-bin and
    the item of one M-bin onto current. Stops when F-bins or M-bins run out.
    """
    if capacity % 2:
        raise CombineContractError(f"combine needs an even capacity, got {capacity}")
    if max_color is None:
        counts = Counter(chain.from_iterable(bins))
        if not counts:
            return list(bins)
        max_color = max(counts, key=lambda c: (counts[c], -c))

    work = [list(items) for items in bins]
    classes: dict[int, BinClass] = {}
    for index, items in enumerate(work):
        bin_class = classify_bin(items, capacity, max_color)
        if bin_class is not None:
            classes[index] = bin_class
    m_bins = deque(i for i, c in classes.items() if c is BinClass.M)
    f_bins = deque(i for i, c in classes.items() if c is BinClass.F)
    p_bins = [i for i, c in classes.items() if c is BinClass.P]
    if len(p_bins) > 1:
        raise CombineContractError(f"at most one P-bin may exist, found {len(p_bins)}")

    if p_bins:
        current = p_bins[0]
    elif m_bins:
        current = m_bins.popleft()
        classes[current] = BinClass.COMBINED
    else:
        return [tuple(items) for items in work]

    deleted: set[int] = set()
    while f_bins and m_bins:
        if len(work[current]) + 2 > capacity:
            current = m_bins.popleft()
            classes[current] = BinClass.COMBINED
            continue
        x = work[f_bins.popleft()].pop()
        m_index = m_bins.popleft()
        y = work[m_index].pop()
        deleted.add(m_index)
        work[current].append(x)
        work[current].append(y)

    log.debug(
        "Combine: %d -> %d bins (%d F-tops left, %d M-bins left)",
        len(work),
        len(work) - len(deleted),
        len(f_bins),
        len(m_bins),
    )
    return [tuple(items) for index, items in enumerate(work) if index not in deleted]


def pack_unit(instance: Instance) -> Packing:
    """Optimal packing of unit-weight items into bins of capacity L."""
    if instance.is_zero_weight:
        raise WrongModeError("pack_unit needs a unit-weight instance (capacity >= 1)")
    if instance.n == 0:
        return Packing(instance=instance)

    capacity = instance.capacity
    counts = instance.counts
    if capacity == 1:
        singles = [(color,) for color, count in enumerate(counts) for _ in range(count)]
        return Packing(instance=instance, bins=tuple(singles))

    stats = compute_stats(instance)
    max_color = stats.max_color
    discrepancy = stats.discrepancy
    names = instance.colors.names

    if discrepancy <= 0:
        log.debug("Unit-weight L=%d: D=%d <= 0, splitting one sequence", capacity, discrepancy)
        bins = split_sequence(zero_sequence(counts, names), capacity)
        return Packing(instance=instance, bins=tuple(bins))

    others = other_items(counts, max_color)

    if capacity % 2 == 0:
        bins, _ = _alternating_bins(max_color, others, capacity)
        used = sum(items.count(max_color) for items in bins)
        bins.extend([(max_color,)] * (stats.max_count - used))
        log.debug(
            "Unit-weight L=%d even: D=%d, %d bins before Combine", capacity, discrepancy, len(bins)
        )
        return Packing(instance=instance, bins=tuple(combine(bins, capacity, max_color)))

    per_bin = capacity // 2
    threshold = -(-stats.other_count // per_bin)
    if discrepancy <= threshold:
        bins, placed = _alternating_bins(max_color, others, capacity, limit=discrepancy)
        remainder = list(counts)
        remainder[max_color] -= sum(items.count(max_color) for items in bins)
        for color, used in Counter(others[:placed]).items():
            remainder[color] -= used
        log.debug(
            "Unit-weight L=%d odd: D=%d <= %d, %d alternating bins then %d items left",
            capacity,
            discrepancy,
            threshold,
            len(bins),
            sum(remainder),
        )
        bins.extend(split_sequence(zero_sequence(remainder, names), capacity))
        return Packing(instance=instance, bins=tuple(bins))

    bins, _ = _alternating_bins(max_color, others, capacity)
    used = sum(items.count(max_color) for items in bins)
    bins.extend([(max_color,)] * (stats.max_count - used))
    log.debug(
        "Unit-weight L=%d odd: D=%d > %d, %d bins", capacity, discrepancy, threshold, len(bins)
    )
    return Packing(instance=instance, bins=tuple(bins))
