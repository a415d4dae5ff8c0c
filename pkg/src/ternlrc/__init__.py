"""Optimal ternary locally repairable codes: constructions, verification and search."""

__version__ = "0.1.0"
