"""Tests for the unit-weight packer and Combine."""

import pytest

from colorpack.errors import CombineContractError, WrongModeError
from colorpack.models import Instance
from colorpack.unit_weight import BinClass, classify_bin, combine, pack_unit, split_sequence
from colorpack.validation import validate_packing


def _make_instance(capacity: int, **counts: int) -> Instance:
    return Instance.from_counts(counts, capacity)


def _bin_names(packing) -> list[str]:
    return ["".join(b) for b in packing.named_bins()]


def _pack_checked(instance: Instance):
    packing = pack_unit(instance)
    report = validate_packing(instance, packing)
    assert report.valid, report.violations
    return packing


# Bins for Combine written with W=0, B=1, Y=2, G=3.
_IDS = {"W": 0, "B": 1, "Y": 2, "G": 3}


def _bins(*bins: str) -> list[tuple[int, ...]]:
    return [tuple(_IDS[ch] for ch in b) for b in bins]


def test_capacity_bound_split():
    packing = _pack_checked(_make_instance(3, W=4, B=3, Y=2))
    assert _bin_names(packing) == ["BYW", "BWB", "WYW"]


def test_even_capacity_with_combine():
    packing = _pack_checked(_make_instance(6, W=15, B=4, Y=3, G=3))
    assert _bin_names(packing) == ["WBWBW", "WBWGW", "WGWYW", "WYWBW", "WGWYW"]


def test_odd_reducible_exact_fit():
    packing = _pack_checked(_make_instance(5, W=11, B=2, Y=2, G=3))
    assert _bin_names(packing) == ["WGWGW", "WGWBW", "WBWYW", "WYW"]


def test_odd_reducible_with_remainder():
    packing = _pack_checked(_make_instance(5, W=10, B=4, Y=2, G=2))
    assert _bin_names(packing) == ["WBWBW", "WBWBW", "GWGWY", "WYW"]


def test_odd_irreducible():
    packing = _pack_checked(_make_instance(5, W=15, B=3, Y=2, G=2))
    assert packing.bin_count == 8
    assert _bin_names(packing)[-4:] == ["W"] * 4


def test_unit_capacity_is_all_singletons():
    packing = _pack_checked(_make_instance(1, A=1))
    assert packing.bin_count == 1
    assert _pack_checked(_make_instance(1, A=3, B=2)).bin_count == 5


def test_capacity_two_balanced():
    packing = _pack_checked(_make_instance(2, A=2, B=2))
    assert _bin_names(packing) == ["BA", "BA"]


def test_capacity_two_positive_discrepancy():
    packing = _pack_checked(_make_instance(2, A=3, B=1))
    assert _bin_names(packing) == ["AB", "A", "A"]


def test_even_capacity_single_color():
    assert _pack_checked(_make_instance(4, A=5)).bin_count == 5


def test_partial_bin_is_not_a_pair_target():
    packing = _pack_checked(_make_instance(4, A=5, B=1))
    assert _bin_names(packing) == ["ABA", "A", "A", "A"]


def test_empty_instance():
    assert pack_unit(_make_instance(4)).bin_count == 0


def test_pack_unit_rejects_zero_weight():
    with pytest.raises(WrongModeError):
        pack_unit(_make_instance(0, A=1))


def test_split_sequence():
    assert split_sequence([0, 1, 0, 1, 0], 2) == [(0, 1), (0, 1), (0,)]
    assert split_sequence([], 3) == []


def test_classify_bin():
    assert classify_bin((0,), 6, 0) is BinClass.M
    assert classify_bin((0, 1, 0), 6, 0) is BinClass.P
    assert classify_bin((0, 1, 0, 1, 0), 6, 0) is BinClass.PARTIAL
    assert classify_bin((0, 1, 0, 1, 0, 1), 6, 0) is BinClass.F
    assert classify_bin((1,), 6, 0) is None
    assert classify_bin((), 6, 0) is None


def test_combine_worked_example():
    bins = _bins("WBWBWB", "WBWYWY", "WYWGWG", "WGW", "W", "W", "W", "W")
    assert combine(bins, 6) == _bins("WBWBW", "WBWYW", "WYWGW", "WGWBW", "WYWGW")


def test_combine_with_explicit_max_color():
    bins = _bins("WBWBWB", "WBWYWY", "WYWGWG", "WGW", "W", "W", "W", "W")
    assert combine(bins, 6, max_color=0) == combine(bins, 6)


def test_combine_without_m_bins_is_unchanged():
    bins = _bins("WBWB", "WBW")
    assert combine(bins, 4, max_color=0) == bins


def test_combine_without_f_bins_is_unchanged():
    bins = _bins("WBW", "W", "W")
    assert combine(bins, 4, max_color=0) == bins


def test_combine_empty():
    assert combine([], 4) == []


def test_combine_rejects_odd_capacity():
    with pytest.raises(CombineContractError):
        combine(_bins("WBW", "W"), 5, max_color=0)


def test_combine_rejects_two_p_bins():
    with pytest.raises(CombineContractError):
        combine(_bins("WBW", "WYW", "W"), 6, max_color=0)


def test_combine_leaves_at_most_one_singleton_beside_full_bins():
    instance = _make_instance(4, A=20, B=3, C=2)
    packing = _pack_checked(instance)
    max_color = 0
    full = [b for b in packing.bins if classify_bin(b, 4, max_color) is BinClass.F]
    singles = [b for b in packing.bins if classify_bin(b, 4, max_color) is BinClass.M]
    assert not (full and len(singles) > 1)


def test_pack_is_deterministic():
    instance = _make_instance(6, W=15, B=4, Y=3, G=3)
    assert pack_unit(instance) == pack_unit(instance)
