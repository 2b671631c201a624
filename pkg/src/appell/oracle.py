"""Appell polynomials read straight off their generating functions.

Everything here is the ground truth that the closed forms in
:mod:`appell.classical`, :mod:`appell.symmetry` and :mod:`appell.higher`
are checked against.  Only the type g(t) = t is supported.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exact import (
    DomainError,
    Polynomial,
    TruncatedSeries,
    as_rational,
    binomial,
    exp_series,
    format_rational,
    parse_rational,
    series_pow_int,
    series_reciprocal,
)

BERNOULLI = "bernoulli"
EULER = "euler"
KINDS = (BERNOULLI, EULER)


def _check_kind(kind: str) -> str:
    kind = kind.lower()
    if kind not in KINDS:
        raise ValueError(f"kind must be one of {KINDS}, got {kind!r}")
    return kind


@dataclass(frozen=True)
class AppellExpansion:
    """P_0..P_N generated by f(t) e^{xt}."""

    f: TruncatedSeries
    polynomials: tuple
    order: int

    def __getitem__(self, n: int) -> Polynomial:
        return self.polynomials[n]

    def __len__(self):
        return len(self.polynomials)

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "f_coeffs": [format_rational(c) for c in self.f.coeffs],
            "polynomials": [[format_rational(c) for c in p.coeffs] for p in self.polynomials],
        }

    @classmethod
    def from_json(cls, data: dict) -> "AppellExpansion":
        f = TruncatedSeries([parse_rational(c) for c in data["f_coeffs"]])
        polys = tuple(Polynomial(parse_rational(c) for c in p) for p in data["polynomials"])
        return cls(f, polys, int(data["order"]))


def appell_from_f(f: TruncatedSeries, N: int) -> AppellExpansion:
    """Expand f(t) e^{xt} = sum P_n(x) t^n/n! for n <= N.

    P_n(x) = sum_k C(n, k) a_k x^{n-k} with a_k = k! [t^k] f.
    """
    if N < 0:
        raise ValueError("N must be non-negative")
    if f.order < N:
        raise DomainError(f"f has order {f.order}; order >= {N} is required")
    a = f.exponential_coeffs()[: N + 1]
    polys = []
    for n in range(N + 1):
        coeffs = [Fraction(0)] * (n + 1)
        for k in range(n + 1):
            coeffs[n - k] = binomial(n, k) * a[k]
        polys.append(Polynomial(coeffs))
    return AppellExpansion(f.truncate(N), tuple(polys), N)


def bernoulli_kernel(N: int) -> TruncatedSeries:
    """t/(e^t - 1) to order N, as the reciprocal of sum t^k/(k+1)!."""
    return series_reciprocal(TruncatedSeries(Fraction(1, math.factorial(k + 1)) for k in range(N + 1)))


def euler_kernel(N: int) -> TruncatedSeries:
    """2/(e^t + 1) to order N, as the reciprocal of (e^t + 1)/2."""
    return series_reciprocal((exp_series(N) + 1) * Fraction(1, 2))


def _power_kernel(base: TruncatedSeries, r: int, scaled: bool) -> TruncatedSeries:
    if r < 1:
        raise ValueError("order r must be a positive integer")
    if scaled:
        base = base.scale_argument(Fraction(1, r))
    return series_pow_int(base, r)


def bernoulli_f_series(r: int, scaled: bool, N: int) -> TruncatedSeries:
    """(t/(e^t-1))^r, or ((t/r)/(e^{t/r}-1))^r when ``scaled``."""
    if N < 0:
        raise ValueError("N must be non-negative")
    return _power_kernel(bernoulli_kernel(N), r, scaled)


def euler_f_series(r: int, scaled: bool, N: int) -> TruncatedSeries:
    """(2/(e^t+1))^r, or (2/(e^{t/r}+1))^r when ``scaled``."""
    if N < 0:
        raise ValueError("N must be non-negative")
    return _power_kernel(euler_kernel(N), r, scaled)


def higher_f_series(kind: str, r: int, scaled: bool, N: int) -> TruncatedSeries:
    if _check_kind(kind) == BERNOULLI:
        return bernoulli_f_series(r, scaled, N)
    return euler_f_series(r, scaled, N)


def higher_oracle_polys(kind: str, r: int, N: int) -> AppellExpansion:
    """Ground-truth B_n^{(r)}(x) or E_n^{(r)}(x) for n <= N."""
    return appell_from_f(higher_f_series(kind, r, False, N), N)


def phi_normalize(p_list: Sequence[Polynomial], phi: Sequence) -> list:
    """Q_n = P_n * n! / (phi(0) ... phi(n)) for each n."""
    phi = [as_rational(v) for v in phi]
    if len(phi) < len(p_list):
        raise ValueError(f"need phi(0..{len(p_list) - 1}), got {len(phi)} values")
    out = []
    prod = Fraction(1)
    for n, p in enumerate(p_list):
        if phi[n] == 0:
            raise DomainError(f"phi({n}) = 0")
        prod *= phi[n]
        out.append(p * (Fraction(math.factorial(n)) / prod))
    return out
