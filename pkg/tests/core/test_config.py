"""
Tests for the config module.
"""

import json

import pytest

from src.core import config
from src.core.config import (
    DEFAULT_CONFIG,
    get_config_value,
    load_config,
    reset_to_defaults,
    save_config,
    set_config_value,
    validate_config,
)


@pytest.fixture
def config_path(tmp_path, monkeypatch):
    """A config file location inside tmp_path, used as the default path."""
    path = tmp_path / "config.json"
    monkeypatch.setattr(config, "CONFIG_PATH", path)
    return path


class TestLoadConfig:
    """Test loading and merging."""

    def test_missing_file_gives_defaults(self, config_path):
        """Test that a missing file yields a copy of the defaults."""
        loaded = load_config()

        assert loaded == DEFAULT_CONFIG
        assert loaded is not DEFAULT_CONFIG

    def test_deep_merge(self, config_path):
        """Test that a partial file overrides only the keys it names."""
        config_path.write_text(json.dumps({"spectral": {"dense_cap": 32}}))

        loaded = load_config()

        assert loaded["spectral"]["dense_cap"] == 32
        assert loaded["spectral"]["max_sweeps"] == 100
        assert loaded["census"] == DEFAULT_CONFIG["census"]

    def test_invalid_json_gives_defaults(self, config_path):
        """Test that a corrupt file falls back to defaults."""
        config_path.write_text("{broken")

        assert load_config() == DEFAULT_CONFIG


class TestConfigValues:
    """Test dotted-path access."""

    def test_get(self):
        """Test nested lookup and the default for missing keys."""
        assert get_config_value("enumeration.tree_cap", config=DEFAULT_CONFIG) == 22
        assert get_config_value("enumeration.nope", 7, config=DEFAULT_CONFIG) == 7

    def test_set_and_reset(self, config_path):
        """Test that set_config_value persists and reset restores defaults."""
        assert set_config_value("census.workers", 4)
        assert load_config()["census"]["workers"] == 4

        assert reset_to_defaults()
        assert load_config() == DEFAULT_CONFIG

    def test_save_creates_parent(self, tmp_path):
        """Test that save_config creates missing directories."""
        target = tmp_path / "nested" / "config.json"

        assert save_config({"census": {"workers": 2}}, target)
        assert json.loads(target.read_text()) == {"census": {"workers": 2}}


class TestValidateConfig:
    """Test validation messages."""

    def test_defaults_are_valid(self):
        """Test that DEFAULT_CONFIG passes validation."""
        assert validate_config(DEFAULT_CONFIG) == []

    @pytest.mark.parametrize(
        ("override", "message"),
        [
            ({"spectral": {"dense_cap": 0}}, "Invalid dense_cap: 0"),
            ({"spectral": {"dense_tolerance": -1}}, "Invalid dense_tolerance"),
            ({"enumeration": {"graph_cap": 9}}, "Invalid graph_cap: 9. Must be 1-7"),
            ({"census": {"workers": "four"}}, "workers must be an integer, got str"),
            ({"census": {"workers": True}}, "workers must be an integer, got bool"),
            ({"logging": {"console_level": "LOUD"}}, "Invalid console_level: LOUD"),
        ],
    )
    def test_invalid_values(self, override, message):
        """Test that each out-of-range value is reported."""
        errors = validate_config(override)

        assert len(errors) == 1
        assert errors[0].startswith(message)
