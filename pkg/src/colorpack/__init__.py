"""colorpack: optimal colored bin packing for zero-weight and unit-weight items."""

from colorpack.models import ColorTable, Instance, Packing, compute_stats
from colorpack.predictor import predicted_bins
from colorpack.solver import solve
from colorpack.validation import validate_packing

__all__ = [
    "ColorTable",
    "Instance",
    "Packing",
    "compute_stats",
    "predicted_bins",
    "solve",
    "validate_packing",
]
