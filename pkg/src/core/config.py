"""
Configuration Management for Spectree

Settings are stored in a JSON file at <DATA_ROOT>/config.json and deep-merged
over DEFAULT_CONFIG. Only the CLI reads this file; library functions take the
same limits as keyword arguments.

Configuration schema:
    {
        "spectral": {
            "dense_cap": 64,
            "dense_tolerance": 1e-10,
            "max_sweeps": 100,
            "threshold_guard": 1e-06
        },
        "domination": {
            "exact_cap": 24
        },
        "enumeration": {
            "tree_cap": 22,
            "graph_cap": 7,
            "canonical_cap": 10,
            "batch_size": 1024
        },
        "census": {
            "workers": 1,
            "checkpoint": true
        },
        "logging": {
            "console_level": "WARNING",
            "file_level": "DEBUG"
        }
    }
"""

import copy
import json
import logging
from pathlib import Path
from typing import Any

from src.core.paths import DATA_ROOT

logger = logging.getLogger(__name__)

CONFIG_PATH: Path = DATA_ROOT / "config.json"

DEFAULT_CONFIG: dict[str, Any] = {
    "spectral": {
        "dense_cap": 64,
        "dense_tolerance": 1e-10,
        "max_sweeps": 100,
        "threshold_guard": 1e-6,
    },
    "domination": {
        "exact_cap": 24,
    },
    "enumeration": {
        "tree_cap": 22,
        "graph_cap": 7,
        "canonical_cap": 10,
        "batch_size": 1024,
    },
    "census": {
        "workers": 1,
        "checkpoint": True,
    },
    "logging": {
        "console_level": "WARNING",
        "file_level": "DEBUG",
    },
}

VALID_LOG_LEVELS = ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]

# Hard upper bounds; above these the algorithms stop being desk-scale
MAX_DENSE_CAP = 1000
MAX_TREE_CAP = 26
MAX_GRAPH_CAP = 7
MAX_CANONICAL_CAP = 12


def _deep_merge(base: dict, override: dict) -> dict:
    """Deep merge two dictionaries, preferring values from override."""
    result = copy.deepcopy(base)
    for key, value in override.items():
        if key in result and isinstance(result[key], dict) and isinstance(value, dict):
            result[key] = _deep_merge(result[key], value)
        else:
            result[key] = value
    return result


def load_config(config_path: Path | None = None) -> dict[str, Any]:
    """
    Load configuration from file, merging with defaults.

    Args:
        config_path: Alternative config file (defaults to CONFIG_PATH)

    Returns:
        Complete configuration dictionary with defaults for missing values.
    """
    path = config_path or CONFIG_PATH
    if not path.exists():
        logger.debug(f"Config file not found, using defaults: {path}")
        return copy.deepcopy(DEFAULT_CONFIG)

    try:
        with open(path) as f:
            user_config = json.load(f)

        config = _deep_merge(DEFAULT_CONFIG, user_config)
        logger.debug(f"Loaded config from {path}")
        return config
    except json.JSONDecodeError as e:
        logger.error(f"Invalid JSON in config file: {e}")
        return copy.deepcopy(DEFAULT_CONFIG)
    except OSError as e:
        logger.error(f"Failed to load config: {e}")
        return copy.deepcopy(DEFAULT_CONFIG)


def save_config(config: dict[str, Any], config_path: Path | None = None) -> bool:
    """
    Save configuration to file.

    Args:
        config: Configuration dictionary to save
        config_path: Alternative config file (defaults to CONFIG_PATH)

    Returns:
        True if saved successfully, False otherwise
    """
    path = config_path or CONFIG_PATH
    try:
        path.parent.mkdir(parents=True, exist_ok=True)

        with open(path, "w") as f:
            json.dump(config, f, indent=2)

        logger.info(f"Saved config to {path}")
        return True
    except OSError as e:
        logger.error(f"Failed to save config: {e}")
        return False


def get_config_value(
    key_path: str, default: Any = None, config: dict[str, Any] | None = None
) -> Any:
    """
    Get a configuration value by dot-separated path.

    Args:
        key_path: Dot-separated path like "spectral.dense_cap"
        default: Default value if key doesn't exist
        config: Already-loaded configuration (loads from disk when None)

    Returns:
        The configuration value or default
    """
    value: Any = load_config() if config is None else config
    for key in key_path.split("."):
        if isinstance(value, dict) and key in value:
            value = value[key]
        else:
            return default

    return value


def set_config_value(key_path: str, value: Any, config_path: Path | None = None) -> bool:
    """
    Set a configuration value by dot-separated path.

    Args:
        key_path: Dot-separated path like "census.workers"
        value: Value to set
        config_path: Alternative config file (defaults to CONFIG_PATH)

    Returns:
        True if saved successfully, False otherwise
    """
    config = load_config(config_path)
    keys = key_path.split(".")

    current = config
    for key in keys[:-1]:
        if key not in current:
            current[key] = {}
        current = current[key]

    current[keys[-1]] = value

    return save_config(config, config_path)


def _check_int(errors: list[str], name: str, value: Any, low: int, high: int) -> None:
    if value is None:
        return
    if not isinstance(value, int) or isinstance(value, bool):
        errors.append(f"{name} must be an integer, got {type(value).__name__}")
    elif not low <= value <= high:
        errors.append(f"Invalid {name}: {value}. Must be {low}-{high}")


def validate_config(config: dict[str, Any]) -> list[str]:
    """
    Validate configuration values.

    Args:
        config: Configuration dictionary to validate

    Returns:
        List of validation error messages (empty if valid)
    """
    errors: list[str] = []

    spectral = config.get("spectral", {})
    _check_int(errors, "dense_cap", spectral.get("dense_cap"), 1, MAX_DENSE_CAP)
    _check_int(errors, "max_sweeps", spectral.get("max_sweeps"), 1, 10_000)
    for key in ("dense_tolerance", "threshold_guard"):
        value = spectral.get(key)
        if value is not None and (not isinstance(value, int | float) or value <= 0):
            errors.append(f"Invalid {key}: {value}. Must be a positive number")

    _check_int(errors, "exact_cap", config.get("domination", {}).get("exact_cap"), 1, 64)

    enumeration = config.get("enumeration", {})
    _check_int(errors, "tree_cap", enumeration.get("tree_cap"), 1, MAX_TREE_CAP)
    _check_int(errors, "graph_cap", enumeration.get("graph_cap"), 1, MAX_GRAPH_CAP)
    _check_int(
        errors, "canonical_cap", enumeration.get("canonical_cap"), 1, MAX_CANONICAL_CAP
    )
    _check_int(errors, "batch_size", enumeration.get("batch_size"), 1, 1_000_000)

    _check_int(errors, "workers", config.get("census", {}).get("workers"), 1, 512)

    for key in ("console_level", "file_level"):
        level = config.get("logging", {}).get(key)
        if level is not None and str(level).upper() not in VALID_LOG_LEVELS:
            errors.append(f"Invalid {key}: {level}. Must be one of {VALID_LOG_LEVELS}")

    return errors


def reset_to_defaults(config_path: Path | None = None) -> bool:
    """Reset configuration to default values."""
    return save_config(copy.deepcopy(DEFAULT_CONFIG), config_path)


if __name__ == "__main__":
    import fire

    def show():
        """Show current configuration."""
        return load_config()

    def get(key_path: str):
        """Get a config value by path (e.g., 'spectral.dense_cap')."""
        return get_config_value(key_path)

    def set_value(key_path: str, value: Any):
        """Set a config value by path."""
        return set_config_value(key_path, value)

    def reset():
        """Reset to default configuration."""
        return reset_to_defaults()

    def validate():
        """Validate current configuration."""
        errors = validate_config(load_config())
        return {"valid": len(errors) == 0, "errors": errors}

    fire.Fire(
        {
            "show": show,
            "get": get,
            "set": set_value,
            "reset": reset,
            "validate": validate,
        }
    )
