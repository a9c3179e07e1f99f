"""Chromatic polynomials, their non-real roots, and ring-of-cliques machinery."""

__version__ = "0.1.0"
