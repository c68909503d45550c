"""Exact computational models of twisted spectral geometry on the flat 4-torus."""

__version__ = "0.1.0"
