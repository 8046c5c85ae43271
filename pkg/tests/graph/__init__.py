"""Tests for the graph module."""
