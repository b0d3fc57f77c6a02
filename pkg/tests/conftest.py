"""Shared pytest fixtures."""

import tempfile
from pathlib import Path
from unittest.mock import patch

import numpy as np
import pytest

from degencount.config import EngineConfig


@pytest.fixture(autouse=True)
def isolate_config(monkeypatch: pytest.MonkeyPatch):
    """Redirect config to temp directory so tests don't affect user's real config."""
    monkeypatch.delenv("DEGENCOUNT_BUDGET", raising=False)
    with tempfile.TemporaryDirectory() as tmpdir:
        config_dir = Path(tmpdir) / "degencount"
        config_file = config_dir / "config.json"
        with (
            patch("degencount.config.CONFIG_DIR", config_dir),
            patch("degencount.config.CONFIG_FILE", config_file),
        ):
            yield


@pytest.fixture
def config() -> EngineConfig:
    return EngineConfig()


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(2024)
