"""Tests for chsh-trap."""
