"""Exact verification toolkit for codegree characterizations of simple groups of Lie type."""

__version__ = "0.1.0"
