"""Hodge operators and metrics on the 4D+ calculus of quantum SU(2)."""

__version__ = "0.1.0"
