"""Pick the zero-weight or unit-weight packer for an instance."""

from __future__ import annotations

from colorpack.models import Instance, Packing
from colorpack.unit_weight import pack_unit
from colorpack.zero_weight import pack_zero


def solve(instance: Instance) -> Packing:
    if instance.is_zero_weight:
        return pack_zero(instance)
    return pack_unit(instance)
