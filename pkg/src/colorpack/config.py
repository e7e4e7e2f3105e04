"""Settings loaded from an optional YAML file."""

from __future__ import annotations

import logging
from pathlib import Path

import yaml
from pydantic import BaseModel, ConfigDict, Field

from colorpack.instance_io import PackingFormat
from colorpack.oracle import DEFAULT_ITEM_LIMIT

log = logging.getLogger(__name__)

DEFAULT_CONFIG_PATH = "colorpack.yaml"


class Settings(BaseModel):
    """Defaults for CLI options. Explicit flags always win."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    format: PackingFormat = PackingFormat.TEXT
    oracle_max_items: int = Field(default=DEFAULT_ITEM_LIMIT, ge=0)
    bench_sizes: list[int] = Field(default_factory=lambda: [100_000, 200_000, 400_000, 800_000])
    bench_trials: int = Field(default=3, ge=0)
    bench_seed: int = Field(default=0, ge=0, lt=2**64)
    bench_max_ratio: float = Field(default=2.5, gt=0)


def load_settings(path: str | None) -> Settings:
    """Load settings from YAML. A missing default file yields the built-in defaults."""
    config_path = Path(path) if path else Path(DEFAULT_CONFIG_PATH)
    if not config_path.exists():
        if path:
            log.warning("Config file %s not found, using defaults", config_path)
        return Settings()
    with open(config_path) as f:
        data = yaml.safe_load(f) or {}
    log.debug("Loaded settings from %s", config_path)
    return Settings.model_validate(data)
