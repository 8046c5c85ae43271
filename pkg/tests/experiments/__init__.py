"""Tests for the experiments module."""
