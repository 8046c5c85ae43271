"""Tests for the families module."""
