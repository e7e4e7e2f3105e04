"""Exception types raised by colorpack."""

from __future__ import annotations


class ColorPackError(Exception):
    """Base class for all colorpack errors."""


class EmptyInstanceError(ColorPackError):
    """Statistics were requested for an instance with no items."""


class WrongModeError(ColorPackError):
    """A zero-weight routine got a unit-weight instance, or the other way round."""


class InfeasibleSequenceError(ColorPackError):
    """The items cannot be laid out as one sequence without adjacent equal colors."""


class StuckAlternationError(ColorPackError):
    """Greedy alternation ran out of usable colors before reaching its target."""


class SolverInvariantError(ColorPackError):
    """A solver produced a packing that fails validation."""


class CombineContractError(ColorPackError):
    """combine() was called with an odd capacity or more than one P-bin."""


class GenerationError(ColorPackError):
    """A GenSpec asks for a skew that its color and item counts cannot satisfy."""


class InstanceParseError(ColorPackError):
    """An instance or packing file could not be parsed."""

    def __init__(self, message: str, line: int | None = None) -> None:
        self.message = message
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class OracleLimitError(ColorPackError):
    """The exact oracle refused an instance with more items than its limit."""

    def __init__(self, items: int, limit: int) -> None:
        self.items = items
        self.limit = limit
        super().__init__(
            f"instance has {items} items, over the exact search limit of {limit} "
            "(raise --max-items to search anyway)"
        )
