"""Tests for the spectral module."""
