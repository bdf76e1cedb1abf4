"""Exact tools for triangle-free graphs excluding suns and 4-sunspots."""

__version__ = "0.1.0"
