"""Spectree - exact Laplacian eigenvalue distributions of trees."""

from pathlib import Path

from dotenv import load_dotenv

# Loaded before src.core.paths is imported so SPECTREE_DATA_ROOT takes effect
_env_file = Path(__file__).parent.parent.parent / ".env"
if _env_file.exists():
    load_dotenv(_env_file)

__version__: str = "0.1.0"
