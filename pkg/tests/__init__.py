"""Spectree test suite."""
