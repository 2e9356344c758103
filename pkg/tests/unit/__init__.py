"""Unit tests for chsh-trap."""
