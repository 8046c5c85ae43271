"""Tests for the enumeration module."""
