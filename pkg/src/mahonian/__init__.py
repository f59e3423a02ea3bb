"""Mahonian-Stirling statistics on partial permutations, Laguerre digraphs
and Jacobi-Rogers continued fractions, in exact integer arithmetic."""

from mahonian.polyring import (
    Poly, Series, bq_factorial, bq_int, q_binomial, q_factorial, q_int, var,
)

__version__ = "0.1.0"

__all__ = [
    "Poly", "Series", "var", "q_int", "bq_int", "q_factorial",
    "bq_factorial", "q_binomial",
]
