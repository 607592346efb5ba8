"""Exact computations with finite-dimensional Hopf superalgebras over cyclotomic fields."""

__version__ = "0.1.0"
