"""Tests for the seeded instance generator."""

import pytest
from pydantic import ValidationError

from colorpack.errors import GenerationError
from colorpack.generator import GenSpec, Skew, color_names, generate
from colorpack.oracle import optimal_bins
from colorpack.solver import solve


def _make_spec(**overrides) -> GenSpec:
    defaults = {"colors": 4, "items": 40, "capacity": 0, "seed": 7, "skew": Skew.UNIFORM}
    defaults.update(overrides)
    return GenSpec(**defaults)


def test_same_spec_same_instance():
    for skew in Skew:
        spec = _make_spec(skew=skew, seed=123)
        assert generate(spec) == generate(spec)


def test_different_seeds_differ():
    instances = {generate(_make_spec(seed=seed)).counts for seed in range(20)}
    assert len(instances) > 1


def test_item_and_capacity_totals():
    instance = generate(_make_spec(items=37, capacity=5))
    assert instance.n == 37
    assert instance.capacity == 5
    assert instance.k == 4


def test_every_color_populated_when_items_allow():
    for seed in range(50):
        instance = generate(_make_spec(colors=6, items=6, seed=seed))
        assert instance.k == 6
        assert all(count == 1 for count in instance.counts)


def test_fewer_items_than_colors():
    instance = generate(_make_spec(colors=5, items=3))
    assert instance.k == 3
    assert instance.n == 3


def test_zero_items():
    assert generate(_make_spec(items=0)).n == 0


def test_max_heavy_has_positive_discrepancy():
    for seed in range(50):
        for items in (1, 2, 9, 40):
            assert generate(_make_spec(items=items, seed=seed, skew=Skew.MAX_HEAVY)).discrepancy > 0


def test_max_heavy_keeps_every_item():
    for seed in range(20):
        for colors, items in ((1, 10), (1, 1), (2, 10), (4, 5), (4, 40)):
            spec = _make_spec(colors=colors, items=items, seed=seed, skew=Skew.MAX_HEAVY)
            instance = generate(spec)
            assert instance.n == items, (colors, items, seed)
            assert instance.discrepancy > 0


def test_balanced_has_no_positive_discrepancy():
    for seed in range(50):
        for colors, items in ((2, 10), (3, 7), (4, 40), (6, 5)):
            spec = _make_spec(colors=colors, items=items, seed=seed, skew=Skew.BALANCED)
            instance = generate(spec)
            assert instance.discrepancy <= 0
            assert instance.n == items


@pytest.mark.parametrize(
    ("colors", "items", "skew"),
    [
        (3, 0, Skew.MAX_HEAVY),
        (1, 5, Skew.BALANCED),
        (3, 1, Skew.BALANCED),
        (2, 7, Skew.BALANCED),
    ],
)
def test_unsatisfiable_skews(colors, items, skew):
    with pytest.raises(GenerationError):
        generate(_make_spec(colors=colors, items=items, skew=skew))


def test_spec_bounds():
    with pytest.raises(ValidationError):
        _make_spec(colors=0)
    with pytest.raises(ValidationError):
        _make_spec(seed=2**64)
    with pytest.raises(ValidationError):
        _make_spec(capacity=-1)


def test_color_names():
    assert color_names(3) == ["A", "B", "C"]
    assert len(color_names(26)) == 26
    assert color_names(30)[:2] == ["c0", "c1"]


def test_balanced_example_is_reproducible():
    spec = GenSpec(colors=3, items=9, capacity=3, seed=42, skew=Skew.BALANCED)
    first = generate(spec)
    assert first == generate(spec)
    assert first.discrepancy <= 0


def test_uniform_example_solves_optimally():
    instance = generate(GenSpec(colors=4, items=10, capacity=5, seed=7, skew=Skew.UNIFORM))
    assert instance.n == 10
    assert solve(instance).bin_count == optimal_bins(instance)


def test_generated_instances_solve_optimally():
    for seed in range(10):
        instance = generate(_make_spec(items=10, capacity=seed % 6, seed=seed))
        assert solve(instance).bin_count == optimal_bins(instance)
