"""Exact rational triangle pairs sharing a circumradius and a perimeter, inradius or area."""

__version__ = "0.1.0"
