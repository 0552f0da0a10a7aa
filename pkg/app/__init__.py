"""Weingarten calculus for the orthogonal and unitary groups on Brauer diagrams."""

__version__ = "0.1.0"
