"""
Data Directory Structure Management for Spectree

This module defines and manages the data directory used by the CLI for logs,
report files and census checkpoints. All paths are relative to DATA_ROOT.

Directory structure:
    <DATA_ROOT>/
    ├── config.json                # Optional user configuration
    ├── logs/                      # spectree.log + spectree.jsonl (rotating)
    ├── reports/                   # CSV / JSON outputs written without --out
    └── checkpoints/               # One JSON file per (kind, order)
        └── census-<source>-n14.json
"""

import logging
import os
import re
from pathlib import Path

logger = logging.getLogger(__name__)


def _get_default_data_root() -> Path:
    """Get the default data root path based on platform."""
    import sys

    if sys.platform == "darwin":
        return Path.home() / "Library" / "Application Support" / "Spectree"
    elif sys.platform == "win32":
        appdata = os.environ.get("LOCALAPPDATA", Path.home() / "AppData" / "Local")
        return Path(appdata) / "Spectree"
    else:
        xdg_data = os.environ.get("XDG_DATA_HOME", Path.home() / ".local" / "share")
        return Path(xdg_data) / "Spectree"


# Allow override via environment variable for testing/development
_data_root_override = os.environ.get("SPECTREE_DATA_ROOT")
DATA_ROOT: Path = Path(_data_root_override) if _data_root_override else _get_default_data_root()

LOG_DIR: Path = DATA_ROOT / "logs"
REPORTS_DIR: Path = DATA_ROOT / "reports"
CHECKPOINT_DIR: Path = DATA_ROOT / "checkpoints"

_REQUIRED_DIRS: tuple[Path, ...] = (
    LOG_DIR,
    REPORTS_DIR,
    CHECKPOINT_DIR,
)

_SOURCE_SAFE = re.compile(r"[^A-Za-z0-9_.-]+")


def ensure_data_directories() -> dict[str, bool]:
    """
    Ensure all required data directories exist.

    Idempotent; safe to call on every CLI start.

    Returns:
        Dictionary mapping directory names to whether they were created (True)
        or already existed (False).
    """
    results: dict[str, bool] = {}

    for dir_path in _REQUIRED_DIRS:
        try:
            created = not dir_path.exists()
            dir_path.mkdir(parents=True, exist_ok=True)
            results[str(dir_path.relative_to(DATA_ROOT))] = created
            if created:
                logger.info(f"Created directory: {dir_path}")
        except OSError as e:
            logger.error(f"Failed to create directory {dir_path}: {e}")
            raise

    return results


def get_checkpoint_path(kind: str, n: int, source: str = "internal") -> Path:
    """
    Get the checkpoint file for one order of a long-running scan.

    Args:
        kind: Scan kind, e.g. "census" or "counterexamples"
        n: The order (vertex count) the checkpoint covers
        source: Stream source label; external graph6 files get their own checkpoints

    Returns:
        Path under CHECKPOINT_DIR

    Raises:
        ValueError: If kind is empty or n is not positive
    """
    if not kind:
        raise ValueError("kind must be a non-empty string")
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")

    label = _SOURCE_SAFE.sub("_", source).strip("_") or "internal"
    return CHECKPOINT_DIR / f"{kind}-{label}-n{n}.json"


def get_report_path(name: str, suffix: str = ".csv") -> Path:
    """Default location for a report written without an explicit --out."""
    return REPORTS_DIR / f"{name}{suffix}"


if __name__ == "__main__":
    import fire

    def init():
        """Initialize all data directories."""
        results = ensure_data_directories()
        return {
            "data_root": str(DATA_ROOT),
            "directories": results,
            "created": sum(1 for created in results.values() if created),
        }

    def show():
        """Show all data directory paths."""
        return {
            "data_root": str(DATA_ROOT),
            "logs": str(LOG_DIR),
            "reports": str(REPORTS_DIR),
            "checkpoints": str(CHECKPOINT_DIR),
        }

    fire.Fire({"init": init, "show": show})
