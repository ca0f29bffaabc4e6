"""Exact divisor-class calculus on strata of k-differentials."""

__version__ = "0.1.0"
