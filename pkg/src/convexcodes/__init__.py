"""Exact construction and verification of convex neural-code realizations."""

__version__ = "0.1.0"
