"""homology module."""
