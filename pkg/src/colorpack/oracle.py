"""Exhaustive search for the true minimum number of bins on small instances.

Packings are built bin by bin, bottom to top: the next item either goes on
top of the open bin (different color, free space left) or starts a new bin,
which closes the old one for good. Every packing can be produced that way.

Colors are interchangeable when they have the same remaining count and
neither is on top of the open bin, so states are keyed on sorted counts.
A transposition table remembers the fewest bins each state was reached with.
"""

from __future__ import annotations

import logging
import sys

from colorpack.errors import OracleLimitError
from colorpack.models import ColorId, Instance
from colorpack.solver import solve
from colorpack.validation import validate_packing

log = logging.getLogger(__name__)

DEFAULT_ITEM_LIMIT = 12

StateKey = tuple[int, tuple[int, ...], int]


class OracleSearch:
    """Branch and bound over bin-by-bin placements of one instance."""

    def __init__(self, instance: Instance, best_known: int) -> None:
        self.capacity = instance.effective_capacity
        self.best_known = best_known
        self.nodes = 0
        self._remaining = list(instance.counts)
        self._left = instance.n
        self._seen: dict[StateKey, int] = {}

    def run(self) -> int:
        if self._left:
            self._visit(top=None, free=0, bins_used=0)
        return self.best_known

    def _key(self, top: ColorId | None, free: int) -> StateKey:
        remaining = self._remaining
        if top is None or free == 0:
            return -1, tuple(sorted(remaining)), free
        others = tuple(sorted(c for color, c in enumerate(remaining) if color != top))
        return remaining[top], others, free

    @staticmethod
    def _distinct_by_count(remaining: list[int], skip: ColorId | None) -> list[ColorId]:
        """One representative color per distinct non-zero remaining count."""
        chosen: dict[int, ColorId] = {}
        for color, count in enumerate(remaining):
            if count and color != skip and count not in chosen:
                chosen[count] = color
        return sorted(chosen.values(), key=lambda c: -remaining[c])

    def _place(self, color: ColorId, free: int, bins_used: int) -> None:
        self._remaining[color] -= 1
        self._left -= 1
        self._visit(top=color, free=free, bins_used=bins_used)
        self._remaining[color] += 1
        self._left += 1

    def _visit(self, top: ColorId | None, free: int, bins_used: int) -> None:
        self.nodes += 1
        if self._left == 0:
            self.best_known = min(self.best_known, bins_used)
            return
        overflow = max(0, self._left - free)
        if bins_used + -(-overflow // self.capacity) >= self.best_known:
            return
        key = self._key(top, free)
        if self._seen.get(key, sys.maxsize) <= bins_used:
            return
        self._seen[key] = bins_used

        if free:
            for color in self._distinct_by_count(self._remaining, skip=top):
                self._place(color, free - 1, bins_used)
        for color in self._distinct_by_count(self._remaining, skip=None):
            self._place(color, self.capacity - 1, bins_used + 1)


def optimal_bins(instance: Instance, item_limit: int = DEFAULT_ITEM_LIMIT) -> int:
    """Exact minimum number of bins over all valid packings of ``instance``."""
    n = instance.n
    if n > item_limit:
        raise OracleLimitError(n, item_limit)
    if n == 0:
        return 0

    packing = solve(instance)
    if validate_packing(instance, packing).valid:
        incumbent = packing.bin_count
    else:
        log.warning("Solver packing is invalid; seeding the search with %d singleton bins", n)
        incumbent = n

    search = OracleSearch(instance, best_known=incumbent)
    best = search.run()
    log.debug(
        "Oracle: %d items, L=%d, optimum %d (solver %d), %d nodes",
        n,
        search.capacity,
        best,
        packing.bin_count,
        search.nodes,
    )
    return best
