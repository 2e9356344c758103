"""End-to-end checks of the published numbers."""
