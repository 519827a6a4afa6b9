"""Exact computations with fusion categories and framed-bordism words."""

__version__ = "0.1.0"
