"""Exact q-difference operators for the generalized DAHA of the double torus."""

__version__ = "0.1.0"
