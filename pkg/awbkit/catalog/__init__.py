"""example catalog module."""
