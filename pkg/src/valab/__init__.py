"""Exact computer algebra for vertex algebroids and their Gorenstein invariants."""

__version__ = "0.1.0"
