"""Tests for the domination module."""
