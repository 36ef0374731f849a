"""
Genus Bounds Calculator - Configuration Management

Type-safe configuration for the calculator. Values are resolved from, lowest
to highest priority:

    1. Field defaults on ``CalculatorConfig``
    2. ``config/defaults.yaml`` (or the file named by ``GENUS_CONFIG_FILE``)
    3. ``GENUS_*`` environment variables
    4. Explicit overrides passed to ``load_config`` (the CLI uses these)

🔧 Grid settings:
    - ``r_max``, ``i_max``, ``d_max``: default sweep grids for the verify suites
    - ``envelope_*``: the smaller grid used by the asymptotic envelope check
    - ``enumeration_cap``: per-cell size above which universal sweeps sample
    - ``identity_enumeration_cap``: the same for the beta = 0 identity sweep,
      whose cells are cheap enough to enumerate much further
    - ``workers``: thread count for grid sweeps

⚡ Threshold settings:
    - ``threshold_max_bits``: largest power-of-two term d0 may materialize
    - ``interval_start_bits`` / ``interval_max_bits``: working precision range
      for the interval evaluation of d0

Usage:
    ```python
    from app.config import load_config

    config = load_config()
    config.r_max          # 60
    load_config(workers=4).workers
    ```
"""

import os
from pathlib import Path
from typing import Any, Optional, Union

from pydantic import Field, model_validator

from genus_core.config import BaseConfig, ConfigLoader, load_config_with_defaults

ENV_PREFIX = "GENUS_"
CONFIG_FILE_ENV = "GENUS_CONFIG_FILE"
DEFAULT_CONFIG_FILE = Path(__file__).resolve().parents[1] / "config" / "defaults.yaml"


class CalculatorConfig(BaseConfig):
    """Grid, precision and concurrency settings for bound sweeps."""

    r_max: int = Field(default=60, ge=4, description="Largest r in universal sweeps")
    i_max: int = Field(default=30, ge=2, description="Largest i in universal sweeps")
    d_max: int = Field(default=100000, ge=21, description="Largest d in degree sweeps")

    envelope_r_max: int = Field(default=20, ge=4)
    envelope_i_max: int = Field(default=6, ge=2)
    envelope_d_max: int = Field(default=10000, ge=21)

    enumeration_cap: int = Field(
        default=256,
        ge=1,
        description="Per-cell case count above which sweeps sample instead of enumerate",
    )
    identity_enumeration_cap: int = Field(
        default=10000,
        ge=1,
        description="Per-cell case count above which the beta = 0 identity sweep samples",
    )
    workers: int = Field(default=1, ge=1, description="Threads used for grid sweeps")

    threshold_max_bits: int = Field(default=1048576, ge=16)
    interval_start_bits: int = Field(default=128, ge=53)
    interval_max_bits: int = Field(default=8192, ge=53)

    @model_validator(mode="after")
    def _check_precision_range(self) -> "CalculatorConfig":
        if self.interval_start_bits > self.interval_max_bits:
            raise ValueError("interval_start_bits must not exceed interval_max_bits")
        return self


def config_file() -> Optional[Path]:
    override = os.getenv(CONFIG_FILE_ENV)
    if override:
        return Path(override)
    return DEFAULT_CONFIG_FILE if DEFAULT_CONFIG_FILE.exists() else None


def load_config(
    config_path: Optional[Union[str, Path]] = None, **overrides: Any
) -> CalculatorConfig:
    """
    Load the calculator configuration.

    ``config_path`` replaces the default file lookup. Without overrides the
    result is cached per configuration file. Overrides that are ``None`` are
    ignored so CLI flags can be passed through as-is.
    """
    path = Path(config_path) if config_path else config_file()
    yaml_file = str(path) if path else None
    overrides = {key: value for key, value in overrides.items() if value is not None}
    if not overrides:
        return load_config_with_defaults(CalculatorConfig, yaml_file, ENV_PREFIX)
    return ConfigLoader(CalculatorConfig).load_from(
        yaml_file=yaml_file, env_prefix=ENV_PREFIX, **overrides
    )


def reset_config_cache() -> None:
    load_config_with_defaults.cache_clear()
