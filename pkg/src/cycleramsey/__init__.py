"""Generalised Ramsey numbers for pairs of cycle sets."""

__version__ = "0.1.0"
