"""Closed-form optimal bin counts, computed without building a packing.

For an even capacity with positive discrepancy the count follows the
initial packing and Combine step by step:

    F   full bins after the initial packing
    R   OtherColors items left over for the partial bin
    P   OtherColors/MaxColor pairs the partial bin can still take (0 if it is not a P-bin)
    M   single-MaxColor bins after the initial packing
    C   combined bins filled to L - 1 items
    RO  OtherColors items in a last, partly filled combined bin
    X   MaxColor singletons left after Combine

The X term subtracts the MaxColor items the P-bin absorbs. The older form
without that term overcounts by one on the 15/4/3/3, L=6 instance (6 instead
of 5); ``uncorrected_even_total`` keeps it around for comparison.
"""

from __future__ import annotations

import logging

from pydantic import BaseModel, ConfigDict

from colorpack.errors import WrongModeError
from colorpack.models import CaseTag, Instance, Mode, compute_stats

log = logging.getLogger(__name__)


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


class CountBreakdown(BaseModel):
    model_config = ConfigDict(frozen=True)

    mode: Mode
    case_tag: CaseTag
    capacity: int = 0
    D: int = 0
    F: int = 0
    R: int = 0
    P: int = 0
    M: int = 0
    C: int = 0
    RO: int = 0
    X: int = 0
    total: int


def branch_of(instance: Instance) -> CaseTag:
    """The solver branch (and closed-form case) an instance falls into."""
    if instance.n == 0:
        return CaseTag.EMPTY
    discrepancy = instance.discrepancy
    if instance.is_zero_weight:
        return CaseTag.SINGLE_BIN if discrepancy <= 0 else CaseTag.DISCREPANCY_BOUND
    capacity = instance.capacity
    if capacity == 1:
        return CaseTag.UNIT_CAPACITY
    if discrepancy <= 0:
        return CaseTag.CAPACITY_BOUND
    if capacity % 2 == 0:
        return CaseTag.EVEN_COMBINE
    other_count = compute_stats(instance).other_count
    if discrepancy <= _ceil_div(other_count, capacity // 2):
        return CaseTag.ODD_REDUCIBLE
    return CaseTag.ODD_IRREDUCIBLE


def lower_bound(instance: Instance) -> int:
    """Discrepancy bound, plus the capacity bound in unit-weight mode."""
    n = instance.n
    if n == 0:
        return 0
    bound = max(1, instance.discrepancy)
    if not instance.is_zero_weight:
        bound = max(bound, _ceil_div(n, instance.capacity))
    return bound


def predicted_bins_zero(instance: Instance) -> CountBreakdown:
    if not instance.is_zero_weight:
        raise WrongModeError("predicted_bins_zero needs a zero-weight instance")
    tag = branch_of(instance)
    discrepancy = instance.discrepancy
    total = 0 if tag is CaseTag.EMPTY else max(1, discrepancy)
    return CountBreakdown(mode=Mode.ZERO, case_tag=tag, D=discrepancy, total=total)


def _even_breakdown(instance: Instance) -> CountBreakdown:
    stats = compute_stats(instance)
    capacity = instance.capacity
    half = capacity // 2
    per_combined = half - 1  # OtherColors items in a combined bin of L - 1 items

    full = stats.other_count // half
    rest = stats.other_count % half
    pair_room = 0
    if rest and capacity - (2 * rest + 1) >= 2:
        pair_room = (capacity - 1 - rest - rest - 1) // 2
    singles = stats.max_count - full * half - (rest + 1 if rest else 0)

    # Combine runs out of F-bin tops or of M-bins, whichever comes first.
    p_used = min(pair_room, full, singles)
    tops = full - p_used
    seeds_and_pairs = singles - p_used
    if per_combined:
        usable = min(tops, seeds_and_pairs - _ceil_div(seeds_and_pairs, half))
        combined, leftover_tops = divmod(usable, per_combined)
    else:
        combined = leftover_tops = 0
    leftover_max = (
        seeds_and_pairs - combined * half - (leftover_tops + 1 if leftover_tops else 0)
    )

    total = full + (rest > 0) + combined + (leftover_tops > 0) + leftover_max
    log.debug(
        "Even breakdown: F=%d R=%d P=%d M=%d C=%d RO=%d X=%d total=%d",
        full,
        rest,
        pair_room,
        singles,
        combined,
        leftover_tops,
        leftover_max,
        total,
    )
    return CountBreakdown(
        mode=Mode.UNIT,
        case_tag=CaseTag.EVEN_COMBINE,
        capacity=capacity,
        D=stats.discrepancy,
        F=full,
        R=rest,
        P=pair_room,
        M=singles,
        C=combined,
        RO=leftover_tops,
        X=leftover_max,
        total=total,
    )


def predicted_bins_unit(instance: Instance) -> CountBreakdown:
    if instance.is_zero_weight:
        raise WrongModeError("predicted_bins_unit needs a unit-weight instance (capacity >= 1)")
    tag = branch_of(instance)
    capacity = instance.capacity
    n = instance.n
    discrepancy = instance.discrepancy

    if tag is CaseTag.EVEN_COMBINE:
        return _even_breakdown(instance)
    if tag is CaseTag.EMPTY:
        total = 0
    elif tag is CaseTag.UNIT_CAPACITY:
        total = n
    elif tag is CaseTag.CAPACITY_BOUND:
        total = _ceil_div(n, capacity)
    elif tag is CaseTag.ODD_REDUCIBLE:
        total = discrepancy + _ceil_div(n - discrepancy * capacity, capacity)
    else:
        total = discrepancy
    return CountBreakdown(
        mode=Mode.UNIT, case_tag=tag, capacity=capacity, D=discrepancy, total=total
    )


def predicted_bins(instance: Instance) -> CountBreakdown:
    if instance.is_zero_weight:
        return predicted_bins_zero(instance)
    return predicted_bins_unit(instance)


def uncorrected_even_total(breakdown: CountBreakdown) -> int:
    """Even-capacity total with X computed without the P term."""
    if breakdown.case_tag is not CaseTag.EVEN_COMBINE:
        return breakdown.total
    half = breakdown.capacity // 2
    ro = breakdown.RO
    x = max(0, breakdown.M - breakdown.C * half - (ro + 1 if ro else 0))
    return breakdown.F + (breakdown.R > 0) + breakdown.C + (ro > 0) + x
