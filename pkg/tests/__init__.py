"""Tests for degencount."""
