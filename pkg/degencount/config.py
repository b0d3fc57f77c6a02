"""Engine configuration management.

Holds the bounds and tuning knobs shared by the counting engines. Values are
read from ``~/.config/degencount/config.json`` when present; the
``DEGENCOUNT_BUDGET`` environment variable overrides the brute-force budget.
"""

from __future__ import annotations

import json
import logging
import os
from dataclasses import asdict, dataclass, fields, replace
from pathlib import Path
from typing import Literal

CONFIG_DIR = Path.home() / ".config" / "degencount"
CONFIG_FILE = CONFIG_DIR / "config.json"
BUDGET_ENV_VAR = "DEGENCOUNT_BUDGET"

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class EngineConfig:
    """Engine configuration."""

    brute_budget: int = 10_000_000  # Max |V(G)|^|V(H)| for exhaustive map enumeration
    small_graph_bound: int = 16  # Canonical form vertex cap
    dtw_vertex_bound: int = 10  # Exhaustive dag treewidth / tau cap
    partition_bound: int = 10  # Bell-number enumeration cap
    dictionary: Literal["ordered", "hashed"] = "ordered"
    dtd_strategy: Literal["kernel", "optimal"] = "kernel"
    threads: int = 1
    approx_groups: int = 9
    approx_group_constant: float = 3.0  # Group size ceil(c * e^k / eps^2)
    property_sample_constant: float = 1.0  # Samples ceil(c * eps^-2 * (dk + k)^k)
    tensor_retries: int = 8
    threshold_cap: int = 12

    @classmethod
    def load(cls) -> EngineConfig:
        """Load configuration from file, then apply environment overrides."""
        config = cls()
        try:
            if CONFIG_FILE.exists():
                with open(CONFIG_FILE, "r") as f:
                    data = json.load(f)
                known = {f.name for f in fields(cls)}
                config = cls(**{k: v for k, v in data.items() if k in known})
        except (OSError, IOError, json.JSONDecodeError, TypeError, KeyError):
            pass
        budget = os.environ.get(BUDGET_ENV_VAR)
        if budget:
            try:
                config = replace(config, brute_budget=int(budget))
            except ValueError:
                logger.warning(f"ignoring non-integer {BUDGET_ENV_VAR}={budget!r}")
        return config

    def save(self) -> None:
        """Save configuration to file."""
        try:
            CONFIG_DIR.mkdir(parents=True, exist_ok=True)
            with open(CONFIG_FILE, "w") as f:
                json.dump(asdict(self), f, indent=2)
        except (OSError, IOError, TypeError):
            pass

    def with_overrides(self, **changes: object) -> EngineConfig:
        """Copy with the given non-None fields replaced."""
        return replace(self, **{k: v for k, v in changes.items() if v is not None})
