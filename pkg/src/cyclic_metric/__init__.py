"""Exact computations with cyclic metrics on Lie algebras over the rationals."""

__version__ = "0.1.0"
