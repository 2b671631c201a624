"""Closed forms for Bernoulli and Euler polynomials of order r.

Each formula is transcribed as printed and keyed by a formula id; the
validation harness compares it against the generating-function oracle and
reports mismatches with full coefficient lists.  Nothing here is adjusted
to make a comparison pass.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional

from .classical import (
    bernoulli_number,
    euler_at_zero,
    scaled_bernoulli,
    scaled_euler,
    stirling_first,
)
from .exact import DomainError, Polynomial, binomial, format_rational, parse_rational
from .oracle import BERNOULLI, EULER, _check_kind, higher_oracle_polys


def _check_r(r: int, minimum: int = 1):
    if r < minimum:
        raise DomainError(f"order r must be >= {minimum}, got {r}")


def bernoulli_higher_number(n: int, r: int) -> Fraction:
    """B_n^{(r)} from Stirling numbers of the first kind and Bernoulli numbers."""
    _check_r(r)
    if n < 0:
        raise DomainError("n must be non-negative")
    if n < r:
        return Fraction(stirling_first(r, r - n), binomial(r - 1, n))
    total = Fraction(0)
    for k in range(1, r + 1):
        m = n - r + k
        total += (-1) ** (k - 1) * stirling_first(r, k) * bernoulli_number(m) / m
    return n * binomial(n - 1, r - 1) * total


def euler_higher_number(n: int, r: int) -> Fraction:
    """E_n^{(r)} = 2^{r-1}/(r-1)! sum_j (-1)^j s(r, r-j) E_{n+r-j-1}(0)."""
    _check_r(r)
    if n < 0:
        raise DomainError("n must be non-negative")
    total = sum(
        (-1) ** j * stirling_first(r, r - j) * euler_at_zero(n + r - j - 1) for j in range(r)
    )
    return Fraction(2 ** (r - 1), math.factorial(r - 1)) * total


# Bernoulli, order r


def bernoulli_higher_poly_decomp(n: int, r: int) -> Polynomial:
    """-2 sum_{k<=n/2} r^{n-2k-1} B_{2k+1}^{(r)}/(2k+1) C(n,2k) B_{n-2k}(x/r)."""
    _check_r(r)
    out = Polynomial()
    for k in range(n // 2 + 1):
        b = bernoulli_higher_number(2 * k + 1, r)
        if b:
            c = -2 * Fraction(r) ** (n - 2 * k - 1) * b / (2 * k + 1) * binomial(n, 2 * k)
            out = out + scaled_bernoulli(n - 2 * k, r) * c
    return out


def _odd_number_over_index(k: int, r: int) -> Fraction:
    # B_{2k+1}^{(r)}/(2k+1) for 2k+1 >= r, second branch of the Stirling formula
    return binomial(2 * k, r - 1) * sum(
        (-1) ** (j - 1) * stirling_first(r, j) * bernoulli_number(2 * k + 1 - r + j) / (2 * k + 1 - r + j)
        for j in range(1, r + 1)
    )


def bernoulli_higher_poly_stirling(n: int, r: int) -> Polynomial:
    """Two-sum Stirling form for n >= r >= 2, split at k = r/2 exactly as printed.

    The first sum runs over 0 <= k <= r/2 - 1, the second over
    r/2 <= k <= n/2.  For odd r the index k = (r-1)/2 falls in neither.
    """
    _check_r(r, 2)
    if n < r:
        raise DomainError(f"Stirling form needs n >= r, got n={n}, r={r}")
    R = Fraction(r)
    out = Polynomial()
    for k in range(0, (r - 2) // 2 + 1):
        c = (
            -2 * R ** (n - 1) * R ** (-2 * k)
            * Fraction(stirling_first(r, r - 2 * k - 1), 2 * k + 1)
            * Fraction(binomial(n, 2 * k), binomial(r - 1, 2 * k + 1))
        )
        out = out + scaled_bernoulli(n - 2 * k, r) * c
    for k in range((r + 1) // 2, n // 2 + 1):
        c = -2 * R ** (n - 1) * R ** (-2 * k) * _odd_number_over_index(k, r) * binomial(n, 2 * k)
        if c:
            out = out + scaled_bernoulli(n - 2 * k, r) * c
    return out


def bernoulli_higher_poly_stirling_derived(n: int, r: int) -> Polynomial:
    """Stirling form with the split placed at 2k+1 = r so no index is skipped."""
    _check_r(r, 2)
    if n < r:
        raise DomainError(f"Stirling form needs n >= r, got n={n}, r={r}")
    R = Fraction(r)
    out = Polynomial()
    for k in range(n // 2 + 1):
        if 2 * k + 1 < r:
            q = Fraction(stirling_first(r, r - 2 * k - 1), (2 * k + 1) * binomial(r - 1, 2 * k + 1))
        else:
            q = _odd_number_over_index(k, r)
        if q:
            out = out + scaled_bernoulli(n - 2 * k, r) * (-2 * R ** (n - 1 - 2 * k) * q * binomial(n, 2 * k))
    return out


def bernoulli_order2_poly(n: int) -> Polynomial:
    """sum_{k<=n/2} 2^{n-2k} C(n,2k) B_{2k} B_{n-2k}(x/2)."""
    out = Polynomial()
    for k in range(n // 2 + 1):
        c = 2 ** (n - 2 * k) * binomial(n, 2 * k) * bernoulli_number(2 * k)
        out = out + scaled_bernoulli(n - 2 * k, 2) * c
    return out


def bernoulli_order3_poly_basic(n: int) -> Polynomial:
    """3^n B_n(x/3) - 2 sum_{1<=k<=n/2} 3^{n-2k-1} B_{2k+1}^{(3)}/(2k+1) C(n,2k) B_{n-2k}(x/3)."""
    out = scaled_bernoulli(n, 3) * 3**n
    for k in range(1, n // 2 + 1):
        c = -2 * Fraction(3) ** (n - 2 * k - 1) * bernoulli_higher_number(2 * k + 1, 3) / (2 * k + 1) * binomial(n, 2 * k)
        out = out + scaled_bernoulli(n - 2 * k, 3) * c
    return out


def bernoulli_order3_poly_refined(n: int, literal: bool = True) -> Polynomial:
    """Refined order-3 display for n >= 4.

    As printed the k >= 2 terms carry -2 * 3^{n-2k} (2k-1) C(n,2k) B_{2k}.
    Since B_{2k+1}^{(3)}/(2k+1) = 3(2k-1)/2 B_{2k} for k >= 2, the value
    consistent with the basic display is half of that; ``literal=False``
    uses it.
    """
    if n < 4:
        raise DomainError("the refined order-3 display needs n >= 4")
    scale = 2 if literal else 1
    out = scaled_bernoulli(n, 3) * 3**n
    out = out + scaled_bernoulli(n - 2, 3) * (Fraction(1, 2) * 3 ** (n - 2) * binomial(n, 2))
    for k in range(2, n // 2 + 1):
        c = -scale * 3 ** (n - 2 * k) * (2 * k - 1) * binomial(n, 2 * k) * bernoulli_number(2 * k)
        out = out + scaled_bernoulli(n - 2 * k, 3) * c
    return out


def bernoulli_order3_poly(n: int) -> Polynomial:
    return bernoulli_order3_poly_refined(n, literal=False) if n >= 4 else bernoulli_order3_poly_basic(n)


# Euler, order r


def euler_higher_poly_decomp(n: int, r: int) -> Polynomial:
    """sum_{k<=n/2} r^{n-2k} C(n,2k) E_{2k}^{(r)} E_{n-2k}(x/r)."""
    _check_r(r)
    out = Polynomial()
    for k in range(n // 2 + 1):
        e = euler_higher_number(2 * k, r)
        if e:
            out = out + scaled_euler(n - 2 * k, r) * (Fraction(r) ** (n - 2 * k) * binomial(n, 2 * k) * e)
    return out


def euler_higher_poly_stirling(n: int, r: int) -> Polynomial:
    """Double sum over j < r and k <= n/2 of Stirling numbers times Euler values."""
    _check_r(r)
    pref = Fraction(2 ** (r - 1), math.factorial(r - 1))
    out = Polynomial()
    for k in range(n // 2 + 1):
        c = Fraction(0)
        for j in range(r):
            c += (-1) ** j * stirling_first(r, r - j) * euler_at_zero(2 * k + r - j - 1)
        if c:
            out = out + scaled_euler(n - 2 * k, r) * (pref * c * binomial(n, 2 * k) * Fraction(r) ** (n - 2 * k))
    return out


def euler_order2_poly(n: int) -> Polynomial:
    """2^n E_n(x/2) + sum_{1<=k<=n/2} C(n,2k) 2^{n+1-2k} E_{2k+1}(0) E_{n-2k}(x/2), n >= 2."""
    if n < 2:
        raise DomainError("the order-2 Euler display needs n >= 2")
    out = scaled_euler(n, 2) * 2**n
    for k in range(1, n // 2 + 1):
        c = binomial(n, 2 * k) * Fraction(2) ** (n + 1 - 2 * k) * euler_at_zero(2 * k + 1)
        out = out + scaled_euler(n - 2 * k, 2) * c
    return out


# Validation harness


@dataclass(frozen=True)
class Mismatch:
    n: int
    formula_coeffs: tuple
    oracle_coeffs: tuple

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "formula_coeffs": [_fmt(c) for c in self.formula_coeffs],
            "oracle_coeffs": [_fmt(c) for c in self.oracle_coeffs],
        }


def _fmt(c) -> str:
    if isinstance(c, float):
        return repr(c)
    return format_rational(c)


def _parse(c: str):
    try:
        return parse_rational(c)
    except ValueError:
        return float(c)


@dataclass(frozen=True)
class ValidationReport:
    kind: str
    r: int
    max_n: int
    formula_id: str
    matches: dict
    mismatches: tuple = ()
    notes: tuple = field(default=())

    @property
    def all_match(self) -> bool:
        return all(self.matches.values())

    @property
    def first_mismatch(self) -> Optional[Mismatch]:
        return self.mismatches[0] if self.mismatches else None

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "r": self.r,
            "formula": self.formula_id,
            "max_n": self.max_n,
            "matches": {str(n): ok for n, ok in sorted(self.matches.items())},
            "mismatches": [m.to_json() for m in self.mismatches],
            "notes": list(self.notes),
        }

    @classmethod
    def from_json(cls, data: dict) -> "ValidationReport":
        mism = tuple(
            Mismatch(
                int(m["n"]),
                tuple(_parse(c) for c in m["formula_coeffs"]),
                tuple(_parse(c) for c in m["oracle_coeffs"]),
            )
            for m in data["mismatches"]
        )
        return cls(
            data["kind"],
            int(data["r"]),
            int(data["max_n"]),
            data["formula"],
            {int(n): bool(ok) for n, ok in data["matches"].items()},
            mism,
            tuple(data.get("notes", ())),
        )


@dataclass(frozen=True)
class _Formula:
    build: Callable[[int, int], Polynomial]
    applies: Callable[[int, int], bool]
    note: str = ""


_ALWAYS = lambda n, r: True  # noqa: E731

BERNOULLI_FORMULAS = {
    "numbers": _Formula(lambda n, r: Polynomial.constant(bernoulli_higher_number(n, r)), _ALWAYS),
    "decomp": _Formula(lambda n, r: bernoulli_higher_poly_decomp(n, r), _ALWAYS),
    "stirling": _Formula(
        bernoulli_higher_poly_stirling,
        lambda n, r: n >= r >= 2,
        "trailing ', j >= r/2' on the inner display read as the bound k >= r/2 of the second sum",
    ),
    "stirling-derived": _Formula(bernoulli_higher_poly_stirling_derived, lambda n, r: n >= r >= 2),
    "order2": _Formula(lambda n, r: bernoulli_order2_poly(n), lambda n, r: r == 2),
    "order3": _Formula(lambda n, r: bernoulli_order3_poly_basic(n), lambda n, r: r == 3),
    "order3-refined": _Formula(lambda n, r: bernoulli_order3_poly_refined(n), lambda n, r: r == 3 and n >= 4),
    "order3-refined-derived": _Formula(
        lambda n, r: bernoulli_order3_poly_refined(n, literal=False), lambda n, r: r == 3 and n >= 4
    ),
}

EULER_FORMULAS = {
    "numbers": _Formula(lambda n, r: Polynomial.constant(euler_higher_number(n, r)), _ALWAYS),
    "decomp": _Formula(lambda n, r: euler_higher_poly_decomp(n, r), _ALWAYS),
    "stirling": _Formula(euler_higher_poly_stirling, _ALWAYS),
    "order2": _Formula(
        lambda n, r: euler_order2_poly(n),
        lambda n, r: r == 2 and n >= 2,
        "left side printed as E_n^{(r)}(x) and argument as x/r; evaluated with r = 2",
    ),
}

FOURIER_FORMULAS = ("fourier-literal", "fourier-derived")


def formula_ids(kind: str) -> list:
    kind = _check_kind(kind)
    if kind == BERNOULLI:
        return list(BERNOULLI_FORMULAS)
    return list(EULER_FORMULAS) + list(FOURIER_FORMULAS)


def validate_formula(kind: str, formula_id: str, r: int, max_n: int, **fourier_opts) -> ValidationReport:
    """Compare one formula with the oracle for every applicable n <= max_n."""
    kind = _check_kind(kind)
    _check_r(r)
    if formula_id in FOURIER_FORMULAS:
        if kind != EULER:
            raise ValueError(f"{formula_id} is only defined for Euler polynomials")
        from .fourier import validate_fourier

        return validate_fourier(r, max_n, variant=formula_id.split("-")[1], **fourier_opts)
    table = BERNOULLI_FORMULAS if kind == BERNOULLI else EULER_FORMULAS
    if formula_id not in table:
        raise ValueError(f"unknown formula {formula_id!r} for {kind}; choose from {formula_ids(kind)}")
    spec = table[formula_id]
    oracle = higher_oracle_polys(kind, r, max_n)
    matches = {}
    mismatches = []
    for n in range(max_n + 1):
        if not spec.applies(n, r):
            continue
        got = spec.build(n, r)
        want = oracle[n] if formula_id != "numbers" else Polynomial.constant(oracle[n].coeff(0))
        matches[n] = got == want
        if not matches[n]:
            mismatches.append(Mismatch(n, got.coeffs, want.coeffs))
    notes = (spec.note,) if spec.note else ()
    return ValidationReport(kind, r, max_n, formula_id, matches, tuple(mismatches), notes)


def validate_formulas(kind: str, r: int, max_n: int) -> list:
    """Run every formula id that applies to (kind, r)."""
    reports = []
    for fid in formula_ids(kind):
        rep = validate_formula(kind, fid, r, max_n)
        if rep.matches:
            reports.append(rep)
    return reports
