"""Tests for configuration module."""

import json
import logging
import tempfile
import tomllib
from pathlib import Path
from unittest.mock import patch

from degencount import config as config_module
from degencount.config import EngineConfig


class TestEngineConfigDefault:
    """Tests for EngineConfig defaults."""

    def test_default_values(self):
        """Test default configuration values."""
        config = EngineConfig()
        assert config.brute_budget == 10_000_000
        assert config.dictionary == "ordered"
        assert config.threads == 1
        assert config.approx_groups == 9

    def test_custom_values(self):
        """Test custom configuration values."""
        config = EngineConfig(threads=4, dictionary="hashed", threshold_cap=6)
        assert config.threads == 4
        assert config.dictionary == "hashed"
        assert config.threshold_cap == 6


class TestEngineConfigOverrides:
    """Tests for with_overrides."""

    def test_none_is_ignored(self):
        """Test None leaves the field unchanged."""
        config = EngineConfig(threads=3).with_overrides(threads=None)
        assert config.threads == 3

    def test_override_replaces(self):
        config = EngineConfig().with_overrides(threads=2, brute_budget=50)
        assert (config.threads, config.brute_budget) == (2, 50)


class TestEngineConfigSaveLoad:
    """Tests for save/load functionality."""

    def test_save_and_load(self):
        """Test saving and loading configuration."""
        EngineConfig(threads=5, approx_groups=3).save()
        assert config_module.CONFIG_FILE.exists()
        loaded = EngineConfig.load()
        assert loaded.threads == 5
        assert loaded.approx_groups == 3

    def test_load_missing_file(self):
        """Test loading when config file doesn't exist."""
        assert EngineConfig.load() == EngineConfig()

    def test_load_invalid_json(self):
        """Test loading with invalid JSON."""
        config_module.CONFIG_DIR.mkdir(parents=True)
        config_module.CONFIG_FILE.write_text("invalid json {{{")
        assert EngineConfig.load() == EngineConfig()

    def test_unknown_keys_ignored(self):
        config_module.CONFIG_DIR.mkdir(parents=True)
        config_module.CONFIG_FILE.write_text(json.dumps({"threads": 2, "palette": "dark"}))
        assert EngineConfig.load().threads == 2

    def test_budget_environment_variable(self, monkeypatch):
        """Test DEGENCOUNT_BUDGET overrides the file value."""
        EngineConfig(brute_budget=99).save()
        monkeypatch.setenv("DEGENCOUNT_BUDGET", "1234")
        assert EngineConfig.load().brute_budget == 1234

    def test_bad_budget_ignored(self, monkeypatch, caplog):
        monkeypatch.setenv("DEGENCOUNT_BUDGET", "lots")
        with caplog.at_level(logging.WARNING, logger="degencount.config"):
            assert EngineConfig.load().brute_budget == EngineConfig().brute_budget
        assert "DEGENCOUNT_BUDGET" in caplog.text
        assert "'lots'" in caplog.text

    def test_good_budget_is_quiet(self, monkeypatch, caplog):
        monkeypatch.setenv("DEGENCOUNT_BUDGET", "77")
        with caplog.at_level(logging.WARNING, logger="degencount.config"):
            assert EngineConfig.load().brute_budget == 77
        assert caplog.records == []

    def test_save_handles_errors(self):
        """Test save handles write errors gracefully."""
        with tempfile.TemporaryDirectory() as tmpdir:
            # Create a file instead of directory to cause error
            config_dir = Path(tmpdir) / "config"
            config_dir.write_text("not a directory")

            with patch("degencount.config.CONFIG_DIR", config_dir):
                # Should not raise, just silently fail
                EngineConfig().save()


class TestProjectManifest:
    def test_python_pins_agree(self):
        """The interpreter floor and the type checker target name the same version."""
        manifest = tomllib.loads((Path(__file__).parents[2] / "pyproject.toml").read_text())
        floor = manifest["project"]["requires-python"]
        target = manifest["tool"]["basedpyright"]["pythonVersion"]
        assert floor == ">=3.14"
        assert floor == f">={target}"
