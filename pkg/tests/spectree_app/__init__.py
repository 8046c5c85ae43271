"""Tests for the spectree CLI."""
