"""isoclinism module."""
