"""Locate and remove syntactic negation in sentence/formula pairs."""

__version__ = "0.1.0"
