"""algebra with bracket module."""
