"""Timing harness: checks that solve time grows linearly with the item count."""

from __future__ import annotations

import logging
import time
from collections import defaultdict
from collections.abc import Sequence

import numpy as np
from pydantic import BaseModel, ConfigDict

from colorpack.errors import GenerationError, SolverInvariantError
from colorpack.generator import GenSpec, Skew, generate
from colorpack.models import CaseTag, Instance
from colorpack.predictor import branch_of
from colorpack.solver import solve
from colorpack.validation import validate_packing

log = logging.getLogger(__name__)

BENCH_COLORS = 4
MAX_ATTEMPTS = 64

# (branch, capacity, skew) combinations that land in each solver branch
BRANCH_TARGETS: tuple[tuple[CaseTag, int, Skew], ...] = (
    (CaseTag.SINGLE_BIN, 0, Skew.BALANCED),
    (CaseTag.DISCREPANCY_BOUND, 0, Skew.MAX_HEAVY),
    (CaseTag.UNIT_CAPACITY, 1, Skew.UNIFORM),
    (CaseTag.CAPACITY_BOUND, 4, Skew.BALANCED),
    (CaseTag.EVEN_COMBINE, 6, Skew.MAX_HEAVY),
    (CaseTag.ODD_REDUCIBLE, 3, Skew.MAX_HEAVY),
    (CaseTag.ODD_IRREDUCIBLE, 3, Skew.MAX_HEAVY),
)


class BenchRow(BaseModel):
    model_config = ConfigDict(frozen=True)

    n: int
    capacity: int
    branch: CaseTag
    trial: int
    seconds: float
    bins: int


class BranchScaling(BaseModel):
    branch: CaseTag
    sizes: list[int]
    seconds: list[float]  # best trial per size
    ratios: list[float]  # seconds[i + 1] / seconds[i]


class BenchReport(BaseModel):
    rows: list[BenchRow]
    scaling: list[BranchScaling]
    slope_seconds_per_item: float | None = None

    @property
    def ns_per_item(self) -> float | None:
        if self.slope_seconds_per_item is None:
            return None
        return self.slope_seconds_per_item * 1e9

    def worst_ratio(self) -> float | None:
        ratios = [r for s in self.scaling for r in s.ratios]
        return max(ratios) if ratios else None

    def within(self, max_ratio: float) -> bool:
        """True when every step's time ratio stays under ``max_ratio`` per size doubling."""
        for s in self.scaling:
            for i, ratio in enumerate(s.ratios):
                growth = s.sizes[i + 1] / s.sizes[i]
                if ratio > max_ratio * growth / 2:
                    return False
        return True


def bench_seed(seed: int, *key: int) -> int:
    """Derive a 64-bit generator seed from the bench seed and a row key."""
    state = np.random.SeedSequence([seed, *key]).generate_state(1, dtype=np.uint64)
    return int(state[0])


def instance_for_branch(branch_index: int, n: int, trial: int, seed: int) -> Instance:
    target, capacity, skew = BRANCH_TARGETS[branch_index]
    for attempt in range(MAX_ATTEMPTS):
        spec = GenSpec(
            colors=BENCH_COLORS,
            items=n,
            capacity=capacity,
            seed=bench_seed(seed, branch_index, n, trial, attempt),
            skew=skew,
        )
        instance = generate(spec)
        if branch_of(instance) is target:
            return instance
    raise GenerationError(f"no {target.value} instance with {n} items after {MAX_ATTEMPTS} draws")


def bench_instances(sizes: Sequence[int], trials: int, seed: int) -> list[Instance]:
    """Every instance a bench run would time, in run order."""
    return [
        instance_for_branch(b, n, trial, seed)
        for n in sizes
        for b in range(len(BRANCH_TARGETS))
        for trial in range(trials)
    ]


def run_bench(
    sizes: Sequence[int], trials: int, seed: int, validate: bool = True
) -> BenchReport:
    rows: list[BenchRow] = []
    for n in sizes:
        for b, (target, capacity, _) in enumerate(BRANCH_TARGETS):
            for trial in range(trials):
                instance = instance_for_branch(b, n, trial, seed)
                start = time.perf_counter()
                packing = solve(instance)
                elapsed = time.perf_counter() - start
                if validate and not validate_packing(instance, packing).valid:
                    raise SolverInvariantError(
                        f"invalid packing for {target.value} instance with {n} items"
                    )
                rows.append(
                    BenchRow(
                        n=n,
                        capacity=capacity,
                        branch=target,
                        trial=trial,
                        seconds=elapsed,
                        bins=packing.bin_count,
                    )
                )
                log.debug("%s n=%d trial %d: %.4fs", target.value, n, trial, elapsed)
    return summarise(rows)


def summarise(rows: Sequence[BenchRow]) -> BenchReport:
    best: dict[CaseTag, dict[int, float]] = defaultdict(dict)
    for row in rows:
        per_size = best[row.branch]
        per_size[row.n] = min(per_size.get(row.n, row.seconds), row.seconds)

    scaling = []
    for branch, per_size in best.items():
        sizes = sorted(per_size)
        seconds = [per_size[n] for n in sizes]
        ratios = [b / a if a > 0 else float("inf") for a, b in zip(seconds, seconds[1:])]
        scaling.append(BranchScaling(branch=branch, sizes=sizes, seconds=seconds, ratios=ratios))

    slope = None
    if len({row.n for row in rows}) >= 2:
        xs = np.array([row.n for row in rows], dtype=float)
        ys = np.array([row.seconds for row in rows], dtype=float)
        slope = float(np.polyfit(xs, ys, 1)[0])
    return BenchReport(rows=list(rows), scaling=scaling, slope_seconds_per_item=slope)
