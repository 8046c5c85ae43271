# src package marker - enables imports like `from src.spectral.inertia import ...`
"""Spectree source modules."""
