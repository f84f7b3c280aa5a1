"""Exact enumeration of k-hefty simplices and verification of their covering numbers."""

__version__ = "0.1.0"
