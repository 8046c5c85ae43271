"""
Spectree Core Module

Path management, configuration, logging setup and the shared exception base.
"""

from .errors import CapExceededError, SpectreeError, VerificationError
from .paths import (
    CHECKPOINT_DIR,
    DATA_ROOT,
    LOG_DIR,
    REPORTS_DIR,
    ensure_data_directories,
    get_checkpoint_path,
    get_report_path,
)

__all__ = [
    # Directory paths
    "DATA_ROOT",
    "LOG_DIR",
    "REPORTS_DIR",
    "CHECKPOINT_DIR",
    # Functions
    "ensure_data_directories",
    "get_checkpoint_path",
    "get_report_path",
    # Errors
    "SpectreeError",
    "CapExceededError",
    "VerificationError",
]
