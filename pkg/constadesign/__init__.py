"""Constacyclic codes of length q^2+1 over F_{q^2}, their designs and derived codes."""

__version__ = "1.0.0"
