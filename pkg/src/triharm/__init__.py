"""Exact computer algebra for triangular-partition symmetric functions."""

__version__ = "0.1.0"
