"""Seeded random instances for property tests and benchmarks.

Randomness comes from numpy's PCG64 bit generator, seeded with
``numpy.random.PCG64(seed)`` (which runs the seed through
``numpy.random.SeedSequence``). Draws happen in a fixed order, so a GenSpec
always produces the same instance:

1. heavy color count (max-heavy with two or more colors): ``integers(lo, hi, endpoint=True)``;
   a single color simply gets every item
2. remaining counts: ``multinomial`` with equal probabilities over the colors
   that still need items, after giving each of them one item
3. assignment of counts to names: ``permutation(k)``
"""

from __future__ import annotations

import logging
import string
from enum import Enum

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from colorpack.errors import GenerationError
from colorpack.models import Instance

log = logging.getLogger(__name__)

PRNG_ALGORITHM = "PCG64"


class Skew(str, Enum):
    UNIFORM = "uniform"
    MAX_HEAVY = "max-heavy"  # discrepancy > 0
    BALANCED = "balanced"  # discrepancy <= 0


class GenSpec(BaseModel):
    model_config = ConfigDict(frozen=True)

    colors: int = Field(ge=1)
    items: int = Field(ge=0)
    capacity: int = Field(default=0, ge=0)
    seed: int = Field(default=0, ge=0, lt=2**64)
    skew: Skew = Skew.UNIFORM


def color_names(k: int) -> list[str]:
    if k <= len(string.ascii_uppercase):
        return list(string.ascii_uppercase[:k])
    return [f"c{i}" for i in range(k)]


def _spread(rng: np.random.Generator, total: int, k: int) -> np.ndarray:
    """Split ``total`` items over ``k`` colors, one each first when there are enough."""
    if k == 0:
        return np.zeros(0, dtype=np.int64)
    if total >= k:
        return 1 + rng.multinomial(total - k, [1.0 / k] * k)
    counts = np.zeros(k, dtype=np.int64)
    counts[rng.permutation(k)[:total]] = 1
    return counts


def _balance(counts: np.ndarray) -> np.ndarray:
    """Move items from the largest to the smallest color until 2 * max <= n."""
    n = int(counts.sum())
    while True:
        top = int(counts.argmax())
        surplus = 2 * int(counts[top]) - n
        if surplus <= 0:
            return counts
        low = int(counts.argmin())
        move = max(1, min((surplus + 1) // 2, (int(counts[top]) - int(counts[low])) // 2))
        counts[top] -= move
        counts[low] += move


def _check(spec: GenSpec) -> None:
    k, n = spec.colors, spec.items
    if spec.skew is Skew.MAX_HEAVY and n == 0:
        raise GenerationError("max-heavy needs at least one item")
    if spec.skew is Skew.BALANCED and n > 0:
        if k == 1 or n == 1:
            raise GenerationError("balanced needs two or more colors and two or more items")
        if k == 2 and n % 2:
            raise GenerationError("balanced with two colors needs an even item count")


def generate(spec: GenSpec) -> Instance:
    """Draw an instance. The same GenSpec always yields the same instance."""
    _check(spec)
    rng = np.random.Generator(np.random.PCG64(spec.seed))
    k, n = spec.colors, spec.items

    if spec.skew is Skew.MAX_HEAVY:
        if k == 1:
            heavy = n
        else:
            lo = n // 2 + 1
            hi = max(lo, n - (k - 1))
            heavy = int(rng.integers(lo, hi, endpoint=True))
        counts = np.concatenate(([heavy], _spread(rng, n - heavy, k - 1)))
    else:
        counts = _spread(rng, n, k)
        if spec.skew is Skew.BALANCED:
            counts = _balance(counts)

    names = color_names(k)
    order = rng.permutation(k)
    mapping = {names[int(order[i])]: int(counts[i]) for i in range(k) if counts[i]}
    if n and len(mapping) < k:
        log.warning("Only %d of %d colors populated (%d items)", len(mapping), k, n)
    return Instance.from_counts(mapping, spec.capacity)
