"""central extension module."""
