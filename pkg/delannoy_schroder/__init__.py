"""Exact Delannoy and Schroder polynomial toolkit."""

__version__ = "0.1.0"
