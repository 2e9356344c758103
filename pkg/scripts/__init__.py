"""Command-line scripts for chsh-trap."""
