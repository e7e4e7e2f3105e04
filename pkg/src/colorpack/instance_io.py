"""Read and write instance files and packings.

Instance files are UTF-8 text::

    # optional comments
    capacity: 3
    W 4
    B 3
    Y 2

Capacity 0 marks a zero-weight instance. Packings are written in the
``WBW / BW`` notation (comma-separated items when some color name is longer
than one character) or as a JSON document.
"""

from __future__ import annotations

import re
from collections.abc import Iterable
from enum import Enum

from pydantic import BaseModel, ConfigDict, ValidationError

from colorpack.errors import InstanceParseError
from colorpack.models import NAME_PATTERN, Instance, Packing
from colorpack.validation import validate_packing

INTEGER = re.compile(r"[+-]?\d+")
BIN_SEPARATOR = " / "


class PackingFormat(str, Enum):
    TEXT = "text"
    STRUCTURED = "structured"


class InstanceEcho(BaseModel):
    capacity: int
    counts: dict[str, int]


class PackingDocument(BaseModel):
    """Structured form of a packing."""

    model_config = ConfigDict(frozen=True)

    instance: InstanceEcho
    bins: list[list[str]]
    bin_count: int
    valid: bool


def _parse_int(token: str, what: str, line: int) -> int:
    if not INTEGER.fullmatch(token):
        raise InstanceParseError(f"{what} must be an integer, got {token!r}", line)
    value = int(token)
    if value < 0:
        raise InstanceParseError(f"{what} must be non-negative, got {value}", line)
    return value


def parse_instance(text: str | bytes) -> Instance:
    """Parse an instance file. Line order does not affect color interning."""
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise InstanceParseError(f"not valid UTF-8: {exc}") from exc

    capacity: int | None = None
    counts: dict[str, int] = {}
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, value = line.partition(":")
        if sep and key.strip() == "capacity":
            if capacity is not None:
                raise InstanceParseError("duplicate capacity line", number)
            capacity = _parse_int(value.strip(), "capacity", number)
            continue
        if capacity is None:
            raise InstanceParseError("expected 'capacity: <non-negative integer>' first", number)

        parts = line.split()
        if len(parts) != 2:
            raise InstanceParseError(f"expected '<name> <count>', got {line!r}", number)
        name, count = parts
        if not NAME_PATTERN.fullmatch(name):
            raise InstanceParseError(f"invalid color name {name!r}", number)
        if name in counts:
            raise InstanceParseError(f"duplicate color {name!r}", number)
        counts[name] = _parse_int(count, f"count for {name}", number)

    if capacity is None:
        raise InstanceParseError("missing capacity line")
    return Instance.from_counts(counts, capacity)


def serialize_instance(instance: Instance, comments: Iterable[str] = ()) -> str:
    lines = [f"# {comment}" for comment in comments]
    lines.append(f"capacity: {instance.capacity}")
    lines.extend(f"{name} {count}" for name, count in instance.as_dict().items())
    return "\n".join(lines) + "\n"


def to_document(packing: Packing) -> PackingDocument:
    instance = packing.instance
    return PackingDocument(
        instance=InstanceEcho(capacity=instance.capacity, counts=instance.as_dict()),
        bins=packing.named_bins(),
        bin_count=packing.bin_count,
        valid=validate_packing(instance, packing).valid,
    )


def serialize_packing(packing: Packing, fmt: PackingFormat = PackingFormat.TEXT) -> str:
    if fmt is PackingFormat.STRUCTURED:
        return to_document(packing).model_dump_json(indent=2)
    joiner = "" if packing.instance.colors.single_char else ","
    return BIN_SEPARATOR.join(joiner.join(names) for names in packing.named_bins())


def _split_bin(token: str, single_char: bool) -> list[str]:
    if "," in token or not single_char:
        return [piece.strip() for piece in token.split(",") if piece.strip()]
    return [ch for ch in token if not ch.isspace()]


def parse_packing(text: str | bytes, instance: Instance) -> Packing:
    """Parse a packing in either output format, resolving names against ``instance``."""
    if isinstance(text, bytes):
        text = text.decode("utf-8", errors="replace")
    stripped = text.strip()

    if stripped.startswith("{"):
        try:
            named = PackingDocument.model_validate_json(stripped).bins
        except ValidationError as exc:
            raise InstanceParseError(f"invalid packing document: {exc}") from exc
    elif stripped:
        single_char = instance.colors.single_char
        named = [_split_bin(token, single_char) for token in stripped.split("/")]
    else:
        named = []

    ids = {name: color for color, name in enumerate(instance.colors.names)}
    bins = []
    for names in named:
        unknown = [name for name in names if name not in ids]
        if unknown:
            raise InstanceParseError(f"unknown color {unknown[0]!r} in packing")
        bins.append(tuple(ids[name] for name in names))
    return Packing(instance=instance, bins=tuple(bins))
