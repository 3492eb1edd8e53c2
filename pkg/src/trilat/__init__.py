"""Exact enumeration of walks on bounded triangular (simplex) lattice domains."""

__version__ = "0.1.0"
