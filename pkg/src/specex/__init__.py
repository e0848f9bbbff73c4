"""Exhaustive verification tools for extremal spectral radius results on
graphs with prescribed independence number."""

__version__ = "0.1.0"
