"""Bernoulli and Euler numbers/polynomials, signed Stirling numbers.

Numbers are cached in grow-only tables.  A table is replaced wholesale
(copy-on-extend) under a lock, so a reader always sees a complete tuple.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction

from .exact import DomainError, Polynomial, binomial, poly_compose_affine
from .oracle import bernoulli_kernel, euler_kernel


class _GrowOnlyTable:
    def __init__(self, build):
        # build(N) -> tuple of length >= N + 1
        self._build = build
        self._values: tuple = ()
        self._lock = threading.Lock()

    def get(self, n: int):
        values = self._values
        if n < len(values):
            return values[n]
        with self._lock:
            if n >= len(self._values):
                size = max(n + 1, 2 * len(self._values), 32)
                self._values = tuple(self._build(size - 1))
            return self._values[n]

    def snapshot(self) -> tuple:
        return self._values


def _stirling_rows(N: int):
    rows = [(1,)]
    for n in range(N):
        prev = rows[-1]
        row = [0] * (n + 2)
        for k in range(1, n + 2):
            left = prev[k - 1]
            here = prev[k] if k <= n else 0
            row[k] = left - n * here
        rows.append(tuple(row))
    return rows


_bernoulli = _GrowOnlyTable(lambda N: bernoulli_kernel(N).exponential_coeffs())
_euler0 = _GrowOnlyTable(lambda N: euler_kernel(N).exponential_coeffs())
_stirling = _GrowOnlyTable(_stirling_rows)


@dataclass(frozen=True)
class StirlingTable:
    """Triangle of signed Stirling numbers of the first kind, rows 0..max_n."""

    max_n: int
    values: tuple

    def __call__(self, n: int, k: int) -> int:
        return self.values[n][k]

    def falling_factorial(self, n: int) -> Polynomial:
        return Polynomial(self.values[n])


def stirling_table(max_n: int) -> StirlingTable:
    if max_n < 0:
        raise ValueError("max_n must be non-negative")
    _stirling.get(max_n)
    return StirlingTable(max_n, _stirling.snapshot()[: max_n + 1])


def stirling_first(n: int, k: int) -> int:
    """Signed s(n, k): s(n+1, k) = s(n, k-1) - n s(n, k)."""
    if n < 0 or not 0 <= k <= n:
        raise DomainError(f"stirling_first needs 0 <= k <= n, got n={n}, k={k}")
    return _stirling.get(n)[k]


def bernoulli_number(n: int) -> Fraction:
    """B_n with B_1 = -1/2."""
    if n < 0:
        raise DomainError("bernoulli_number needs n >= 0")
    return _bernoulli.get(n)


def euler_at_zero(k: int) -> Fraction:
    """E_k(0), the values the higher-order formulas call Euler numbers."""
    if k < 0:
        raise DomainError("euler_at_zero needs k >= 0")
    return _euler0.get(k)


def _appell_from_numbers(n: int, number) -> Polynomial:
    coeffs = [Fraction(0)] * (n + 1)
    for k in range(n + 1):
        coeffs[n - k] = binomial(n, k) * number(k)
    return Polynomial(coeffs)


def bernoulli_polynomial(n: int) -> Polynomial:
    if n < 0:
        raise DomainError("bernoulli_polynomial needs n >= 0")
    return _appell_from_numbers(n, bernoulli_number)


def euler_polynomial(n: int) -> Polynomial:
    if n < 0:
        raise DomainError("euler_polynomial needs n >= 0")
    return _appell_from_numbers(n, euler_at_zero)


def scaled_bernoulli(n: int, a) -> Polynomial:
    """B_n(x/a)."""
    return poly_compose_affine(bernoulli_polynomial(n), 1 / Fraction(a), 0)


def scaled_euler(n: int, a) -> Polynomial:
    """E_n(x/a)."""
    return poly_compose_affine(euler_polynomial(n), 1 / Fraction(a), 0)
