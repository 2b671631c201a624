"""Symmetric Appell sequences: P_n(a - x) = (-1)^n P_n(x).

Series-level characterizations, the subspaces V_n(a) spanned by scaled
Bernoulli or Euler polynomials, and reconstruction of P_n from a
parity decomposition of f.  Parity verdicts are only ever "up to the order
of the truncated series" and reports carry that order.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .classical import scaled_bernoulli, scaled_euler
from .exact import (
    DomainError,
    Polynomial,
    TruncatedSeries,
    as_rational,
    binomial,
    format_rational,
    parse_rational,
    poly_compose_affine,
    series_exp,
    series_mul,
)
from .linsolve import solve_exact
from .oracle import BERNOULLI, _check_kind

ODD = "odd"
EVEN = "even"


def _check_parity(parity: str) -> str:
    parity = parity.lower()
    if parity not in (ODD, EVEN):
        raise ValueError(f"parity must be 'odd' or 'even', got {parity!r}")
    return parity


@dataclass(frozen=True)
class Failure:
    n: int
    lhs: Fraction
    rhs: Fraction

    def to_json(self) -> dict:
        return {"n": self.n, "lhs": format_rational(self.lhs), "rhs": format_rational(self.rhs)}

    @classmethod
    def from_json(cls, data: dict) -> "Failure":
        return cls(int(data["n"]), parse_rational(data["lhs"]), parse_rational(data["rhs"]))


@dataclass(frozen=True)
class SymmetryCheck:
    holds: bool
    first_failure: Optional[Failure] = None

    def __bool__(self):
        return self.holds


def check_symmetry(polys: Sequence[Polynomial], a) -> SymmetryCheck:
    """Compare P_n(a - x) with (-1)^n P_n(x) for every n.

    On failure, ``first_failure`` holds n and the first differing coefficient
    of the two sides.
    """
    a = as_rational(a)
    for n, p in enumerate(polys):
        lhs = poly_compose_affine(p, -1, a)
        rhs = p if n % 2 == 0 else -p
        if lhs != rhs:
            width = max(len(lhs.coeffs), len(rhs.coeffs))
            k = next(k for k in range(width) if lhs.coeff(k) != rhs.coeff(k))
            return SymmetryCheck(False, Failure(n, lhs.coeff(k), rhs.coeff(k)))
    return SymmetryCheck(True)


def general_appell_polys(f: TruncatedSeries, g: TruncatedSeries) -> list:
    """P_n with f(t) e^{x g(t)} = sum P_n(x) t^n/n!, n up to the common order."""
    N = min(f.order, g.order)
    f, g = f.truncate(N), g.truncate(N)
    # [x^j] P_n = n!/j! [t^n] f g^j ; g(0)=0 so g^j has valuation >= j
    cols = []
    term = f
    for j in range(N + 1):
        cols.append(term.coeffs)
        term = series_mul(term, g)
    polys = []
    for n in range(N + 1):
        polys.append(Polynomial(
            Fraction(math.factorial(n), math.factorial(j)) * cols[j][n] for j in range(n + 1)
        ))
    return polys


@dataclass(frozen=True)
class SymmetryReport:
    parameter_a: Fraction
    order_checked: int
    symmetric: bool
    g_odd: bool
    h_even: bool
    psi_odd: bool
    equ1_holds: bool
    first_failure: Optional[Failure] = None

    def to_json(self) -> dict:
        return {
            "a": format_rational(self.parameter_a),
            "order": self.order_checked,
            "symmetric": self.symmetric,
            "g_odd": self.g_odd,
            "h_even": self.h_even,
            "psi_odd": self.psi_odd,
            "equ1_holds": self.equ1_holds,
            "first_failure": None if self.first_failure is None else self.first_failure.to_json(),
        }

    @classmethod
    def from_json(cls, data: dict) -> "SymmetryReport":
        ff = data.get("first_failure")
        return cls(
            parse_rational(data["a"]),
            int(data["order"]),
            bool(data["symmetric"]),
            bool(data["g_odd"]),
            bool(data["h_even"]),
            bool(data["psi_odd"]),
            bool(data["equ1_holds"]),
            None if ff is None else Failure.from_json(ff),
        )


def characterize(f: TruncatedSeries, g: TruncatedSeries, a) -> SymmetryReport:
    """Evaluate every symmetry criterion for f(t) e^{x g(t)} at parameter a.

    ``symmetric`` is decided on the polynomials themselves; ``g_odd``,
    ``h_even`` (h = f e^{(a/2) g}), ``psi_odd`` (psi = (e^{a g} - 1) f) and
    ``equ1_holds`` (f(t) e^{a g(t)} = f(-t)) are read off series coefficients.
    ``first_failure`` is the first coefficient where f(t) e^{a g(t)} and
    f(-t) differ.
    """
    a = as_rational(a)
    if g.coeffs[0] != 0:
        raise DomainError("g must vanish at 0")
    N = min(f.order, g.order)
    f, g = f.truncate(N), g.truncate(N)

    h = series_mul(f, series_exp(g * (a / 2)))
    e_ag = series_exp(g * a)
    psi = series_mul(e_ag - 1, f)
    lhs = series_mul(f, e_ag)
    rhs = f.reflect()
    failure = None
    for k in range(N + 1):
        if lhs.coeffs[k] != rhs.coeffs[k]:
            failure = Failure(k, lhs.coeffs[k], rhs.coeffs[k])
            break

    symmetric = check_symmetry(general_appell_polys(f, g), a).holds
    return SymmetryReport(
        parameter_a=a,
        order_checked=N,
        symmetric=symmetric,
        g_odd=g.is_odd(),
        h_even=h.is_even(),
        psi_odd=psi.is_odd(),
        equ1_holds=failure is None,
        first_failure=failure,
    )


def _nonzero_a(a) -> Fraction:
    a = as_rational(a)
    if a == 0:
        raise DomainError("parameter a must be nonzero")
    return a


def vn_basis(kind: str, n: int, a) -> list:
    """[K_{n-2k}(x/a) for 0 <= k <= n//2] with K = B or E."""
    kind = _check_kind(kind)
    a = _nonzero_a(a)
    if n < 0:
        raise ValueError("n must be non-negative")
    make = scaled_bernoulli if kind == BERNOULLI else scaled_euler
    return [make(n - 2 * k, a) for k in range(n // 2 + 1)]


def vn_membership(p: Polynomial, n: int, a, kind: str):
    """Coordinates of p in ``vn_basis(kind, n, a)``, or None if p is outside the span."""
    a = _nonzero_a(a)
    if p.degree > n:
        raise DomainError(f"degree {p.degree} exceeds n={n}")
    basis = vn_basis(kind, n, a)
    rows = [[b.coeff(i) for b in basis] for i in range(n + 1)]
    return solve_exact(rows, [p.coeff(i) for i in range(n + 1)])


@dataclass(frozen=True)
class SymmetryDecomposition:
    """f = sum a_k t^k/k! + F with F of the declared parity."""

    parameter_a: Fraction
    parity: str
    a_coeffs: tuple
    remainder_F: TruncatedSeries

    def to_json(self) -> dict:
        return {
            "a": format_rational(self.parameter_a),
            "parity": self.parity,
            "a_coeffs": [format_rational(c) for c in self.a_coeffs],
            "F": [format_rational(c) for c in self.remainder_F.coeffs],
        }

    @classmethod
    def from_json(cls, data: dict) -> "SymmetryDecomposition":
        return cls(
            parse_rational(data["a"]),
            _check_parity(data["parity"]),
            tuple(parse_rational(c) for c in data["a_coeffs"]),
            TruncatedSeries([parse_rational(c) for c in data["F"]]),
        )


def decompose(f: TruncatedSeries, a, parity: str) -> SymmetryDecomposition:
    """Canonical choice: a_k is k![t^k]f on the class opposite to ``parity``, else 0."""
    a = _nonzero_a(a)
    parity = _check_parity(parity)
    keep = 0 if parity == ODD else 1
    exp_coeffs = f.exponential_coeffs()
    a_coeffs = [c if k % 2 == keep else Fraction(0) for k, c in enumerate(exp_coeffs)]
    return decomposition_from_coeffs(f, a, parity, a_coeffs)


def decomposition_from_coeffs(f: TruncatedSeries, a, parity: str, a_coeffs: Sequence) -> SymmetryDecomposition:
    """Decomposition with caller-chosen a_k; the remainder must have the declared parity."""
    a = _nonzero_a(a)
    parity = _check_parity(parity)
    a_coeffs = [as_rational(c) for c in a_coeffs]
    if len(a_coeffs) < f.order + 1:
        a_coeffs += [Fraction(0)] * (f.order + 1 - len(a_coeffs))
    a_coeffs = a_coeffs[: f.order + 1]
    F = f - TruncatedSeries.from_exponential(a_coeffs, f.order)
    ok = F.is_odd() if parity == ODD else F.is_even()
    if not ok:
        bad = next(k for k, c in enumerate(F.coeffs) if c != 0 and (k % 2 == 0) == (parity == ODD))
        raise DomainError(f"remainder F is not {parity}: coefficient of t^{bad} is {F.coeffs[bad]}")
    return SymmetryDecomposition(a, parity, tuple(a_coeffs), F)


def _needed(d: SymmetryDecomposition, n: int):
    if n < 0:
        raise ValueError("n must be non-negative")
    if n >= len(d.a_coeffs):
        raise DomainError(f"decomposition has a_k only for k <= {len(d.a_coeffs) - 1}; n={n} needs more")


def reconstruct_euler_form(d: SymmetryDecomposition, n: int) -> Polynomial:
    """P_n(x) = sum_{k even} a_k C(n,k) a^{n-k} E_{n-k}(x/a); needs an odd remainder."""
    if d.parity != ODD:
        raise DomainError("Euler-form reconstruction needs an odd remainder F")
    _needed(d, n)
    a = d.parameter_a
    out = Polynomial()
    for k in range(0, n + 1, 2):
        ak = d.a_coeffs[k]
        if ak:
            out = out + scaled_euler(n - k, a) * (ak * binomial(n, k) * a ** (n - k))
    return out


def reconstruct_bernoulli_form(d: SymmetryDecomposition, n: int, literal: bool = False) -> Polynomial:
    """P_n(x) = -2 sum_{k odd} a_k/k C(n,k-1) a^{n-k} B_{n-k+1}(x/a); needs an even remainder.

    With ``literal=True`` the power of a is n-k+1 instead.  Both agree at
    a = 1; only the default reproduces the sequence for other a.
    """
    if d.parity != EVEN:
        raise DomainError("Bernoulli-form reconstruction needs an even remainder F")
    # a_{n+1} enters through C(n, n) B_0
    if n + 1 >= len(d.a_coeffs):
        raise DomainError(f"decomposition has a_k only for k <= {len(d.a_coeffs) - 1}; n={n} needs a_{n + 1}")
    a = d.parameter_a
    shift = 1 if literal else 0
    out = Polynomial()
    for k in range(1, n + 2, 2):
        ak = d.a_coeffs[k]
        if ak:
            c = -2 * ak * Fraction(binomial(n, k - 1), k) * a ** (n - k + shift)
            out = out + scaled_bernoulli(n - k + 1, a) * c
    return out
