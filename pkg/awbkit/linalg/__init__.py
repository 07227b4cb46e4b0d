"""exact linear algebra module."""
