"""Exact Turan numbers for a fixed forbidden graph paired with a linear
forest, with certified extremal constructions and an enumeration oracle."""

__version__ = "0.1.0"
