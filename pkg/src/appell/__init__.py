"""Exact Appell sequences: Bernoulli/Euler families, symmetry tools, Fourier sums."""
from .classical import (
    bernoulli_number,
    bernoulli_polynomial,
    euler_at_zero,
    euler_polynomial,
    stirling_first,
    stirling_table,
)
from .exact import DomainError, Polynomial, TruncatedSeries
from .oracle import AppellExpansion, appell_from_f, higher_oracle_polys

__all__ = [
    "AppellExpansion",
    "DomainError",
    "Polynomial",
    "TruncatedSeries",
    "appell_from_f",
    "bernoulli_number",
    "bernoulli_polynomial",
    "euler_at_zero",
    "euler_polynomial",
    "higher_oracle_polys",
    "stirling_first",
    "stirling_table",
]
