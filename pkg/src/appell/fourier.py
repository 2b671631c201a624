"""Partial sums of Fourier expansions of Bernoulli, Euler and symmetric Appell polynomials.

All sums pair the index m with its mirror (-m for integer frequencies,
1-m for half-integer frequencies), are generated largest |m| first and are
accumulated with ``math.fsum`` on real and imaginary parts separately, so
results are reproducible bit for bit.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

import numpy as np

from .classical import bernoulli_polynomial, euler_at_zero, euler_polynomial, stirling_first
from .exact import DomainError, as_rational, format_rational, parse_rational, poly_eval
from .oracle import euler_f_series, higher_oracle_polys
from .symmetry import (
    ODD,
    SymmetryDecomposition,
    decompose,
    reconstruct_bernoulli_form,
    reconstruct_euler_form,
)

TWO_PI_I = 2j * math.pi
LITERAL = "literal"
DERIVED = "derived"
LITERAL_ORDER2 = "literal-order2"
VARIANTS = (LITERAL, DERIVED, LITERAL_ORDER2)


@dataclass(frozen=True)
class FourierEvaluation:
    n: int
    x: Fraction
    terms_M: int
    partial_sum: float
    imag_residue: float
    exact_value: Fraction

    @property
    def abs_error(self) -> float:
        return abs(self.partial_sum - float(self.exact_value))

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "x": format_rational(self.x),
            "terms_M": self.terms_M,
            "partial_sum": format(self.partial_sum, ".17g"),
            "imag_residue": format(self.imag_residue, ".17g"),
            "exact_value": format_rational(self.exact_value),
            "abs_error": format(self.abs_error, ".17g"),
        }

    @classmethod
    def from_json(cls, data: dict) -> "FourierEvaluation":
        return cls(
            int(data["n"]),
            parse_rational(data["x"]),
            int(data["terms_M"]),
            float(data["partial_sum"]),
            float(data["imag_residue"]),
            parse_rational(data["exact_value"]),
        )


def _fsum_complex(values: np.ndarray) -> complex:
    return complex(math.fsum(values.real), math.fsum(values.imag))


def _half_integer_sum(alphas: dict, n: int, y: float, M: int) -> complex:
    """sum over m with |m - 1/2| <= M + 1/2 of sum_k alpha_k u^{k-n-1} e^{2 pi i u y}, u = m - 1/2.

    The pair (m, 1-m) maps u to -u; pairs are emitted from the outermost inwards.
    """
    u = np.arange(M + 1, 0, -1, dtype=float) - 0.5
    phase = np.exp(TWO_PI_I * u * y)
    inv = 1.0 / u
    total = np.zeros_like(phase)
    for k, alpha in sorted(alphas.items()):
        if alpha == 0:
            continue
        p = n + 1 - k
        pos = inv**p if p >= 0 else u ** (-p)
        neg = pos * (-1) ** p
        total = total + alpha * (pos * phase + neg * np.conj(phase))
    return _fsum_complex(total)


def _integer_sum(alphas: dict, n: int, y: float, M: int) -> complex:
    """sum over 1 <= |m| <= M of sum_k alpha_k m^{k-1-n} e^{2 pi i m y}, paired m with -m."""
    m = np.arange(M, 0, -1, dtype=float)
    phase = np.exp(TWO_PI_I * m * y)
    inv = 1.0 / m
    total = np.zeros_like(phase)
    for k, alpha in sorted(alphas.items()):
        if alpha == 0:
            continue
        p = n + 1 - k
        pos = inv**p if p >= 0 else m ** (-p)
        neg = pos * (-1) ** p
        total = total + alpha * (pos * phase + neg * np.conj(phase))
    return _fsum_complex(total)


def _evaluation(n, x, M, value: complex, exact) -> FourierEvaluation:
    return FourierEvaluation(n, x, M, value.real, value.imag, Fraction(exact))


def _in_unit(y: Fraction, strict: bool) -> bool:
    return 0 < y < 1 if strict else 0 <= y <= 1


def bernoulli_fourier(n: int, x, M: int) -> FourierEvaluation:
    """B_n(x) ~ -n!/(2 pi i)^n sum_{1<=|k|<=M} e^{2 pi i k x}/k^n.

    Valid for 0 < x < 1 when n = 1 and 0 <= x <= 1 when n >= 2.
    """
    x = as_rational(x)
    if n < 1:
        raise DomainError("bernoulli_fourier needs n >= 1")
    if not _in_unit(x, strict=(n == 1)):
        raise DomainError(f"x={x} outside {'0 < x < 1' if n == 1 else '0 <= x <= 1'} for n={n}")
    pref = -math.factorial(n) / TWO_PI_I**n
    value = pref * _integer_sum({1: 1.0}, n, float(x), M)
    return _evaluation(n, x, M, value, poly_eval(bernoulli_polynomial(n), x))


def euler_fourier(n: int, x, M: int) -> FourierEvaluation:
    """E_n(x) ~ 2 n!/(2 pi i)^{n+1} sum e^{2 pi i (m-1/2) x}/(m-1/2)^{n+1}, -M <= m <= M+1.

    Valid for 0 < x < 1 when n = 0 and 0 <= x <= 1 when n >= 1.
    """
    x = as_rational(x)
    if n < 0:
        raise DomainError("euler_fourier needs n >= 0")
    if not _in_unit(x, strict=(n == 0)):
        raise DomainError(f"x={x} outside {'0 < x < 1' if n == 0 else '0 <= x <= 1'} for n={n}")
    pref = 2 * math.factorial(n) / TWO_PI_I ** (n + 1)
    value = pref * _half_integer_sum({0: 1.0}, n, float(x), M)
    return _evaluation(n, x, M, value, poly_eval(euler_polynomial(n), x))


def appell_fourier(d: SymmetryDecomposition, n: int, x, M: int, literal: bool = False) -> FourierEvaluation:
    """Fourier partial sum of the symmetric Appell polynomial P_n built from ``d``.

    Odd remainder:  2 a^n n!/(2 pi i)^{n+1} sum_m c_m^- e^{2 pi i (m-1/2) x/a}/(m-1/2)^{n+1},
    c_m^- = sum_{k even} a_k/k! (pi i/a)^k (2m-1)^k.

    Even remainder: 2 a^n n!/(2 pi i)^{n+1} sum_{m != 0} c_m^+ e^{2 pi i m x/a}/m^n,
    c_m^+ = sum_{k odd} a_k/k! (2 pi i/a)^k m^{k-1}, plus the constant
    -2 a_{n+1}/((n+1) a) carried by B_0.  Only k <= n (odd case) or
    k <= n+1 (even case) contribute.

    ``literal=True`` evaluates the printed variant instead: phase
    e^{2 pi i (.) x}, even-case prefactor -2 a^n n!/(2 pi i)^{n+1} with
    c_m^+ = sum_{k odd} a_k/k! (pi i/a)^{k-1} m^{k-1}, and every supplied a_k.
    The exact reference is always the reconstructed polynomial.
    """
    x = as_rational(x)
    a = d.parameter_a
    y = x / a
    a_coeffs = d.a_coeffs
    if d.parity == ODD:
        if n < 0:
            raise DomainError("n must be non-negative")
        if not _in_unit(y, strict=(n == 0)):
            raise DomainError(f"x/a={y} outside {'0 < x/a < 1' if n == 0 else '0 <= x/a <= 1'} for n={n}")
        exact = poly_eval(reconstruct_euler_form(d, n), x)
        top = len(a_coeffs) - 1 if literal else n
        alphas = {
            k: float(a_coeffs[k] / math.factorial(k)) * (TWO_PI_I / float(a)) ** k
            for k in range(0, min(top, len(a_coeffs) - 1) + 1, 2)
            if a_coeffs[k]
        }
        pref = 2 * float(a) ** n * math.factorial(n) / TWO_PI_I ** (n + 1)
        value = pref * _half_integer_sum(alphas, n, float(x if literal else y), M)
        return _evaluation(n, x, M, value, exact)

    if n < 1:
        raise DomainError("the even-remainder expansion needs n >= 1")
    if not _in_unit(y, strict=(n == 1)):
        raise DomainError(f"x/a={y} outside {'0 < x/a < 1' if n == 1 else '0 <= x/a <= 1'} for n={n}")
    exact = poly_eval(reconstruct_bernoulli_form(d, n), x)
    fa = float(a)
    if literal:
        alphas = {
            k: float(a_coeffs[k] / math.factorial(k)) * (math.pi * 1j / fa) ** (k - 1)
            for k in range(1, len(a_coeffs), 2)
            if a_coeffs[k]
        }
        pref = -2 * fa**n * math.factorial(n) / TWO_PI_I ** (n + 1)
        value = pref * _integer_sum(alphas, n, float(x), M)
        return _evaluation(n, x, M, value, exact)
    alphas = {
        k: float(a_coeffs[k] / math.factorial(k)) * (TWO_PI_I / fa) ** k
        for k in range(1, min(n, len(a_coeffs) - 1) + 1, 2)
        if a_coeffs[k]
    }
    pref = 2 * fa**n * math.factorial(n) / TWO_PI_I ** (n + 1)
    value = pref * _integer_sum(alphas, n, float(y), M)
    if n % 2 == 0 and n + 1 < len(a_coeffs) and a_coeffs[n + 1]:
        value += float(-2 * a_coeffs[n + 1] / ((n + 1) * a))
    return _evaluation(n, x, M, value, exact)


def _order_r_weights(n: int, r: int) -> list:
    # beta_k = sum_j (-1)^j s(r, r-j) E_{2k+r-j-1}(0)
    return [
        sum((-1) ** j * stirling_first(r, r - j) * euler_at_zero(2 * k + r - j - 1) for j in range(r))
        for k in range(n // 2 + 1)
    ]


def _order2_weights(n: int) -> list:
    if n < 2:
        raise DomainError("the order-2 coefficient display needs n >= 2")
    return [Fraction(1, 2)] + [euler_at_zero(2 * k + 1) for k in range(1, n // 2 + 1)]


def _pi_coeffs(m: int, betas) -> tuple:
    # (pi i)^{2k} (2m-1)^{2k} beta_k = [(-1)^k (2m-1)^{2k} beta_k] pi^{2k}
    return tuple(Fraction((-1) ** k * (2 * m - 1) ** (2 * k)) * b for k, b in enumerate(betas))


def euler_order_cm_pi_coeffs(m: int, n: int, r: int) -> tuple:
    """Exact c_m(n, r) of the order-r Euler expansion as coefficients of pi^{2k}.

    c_m(n, r) = sum_{j<r, k<=n/2} (-1)^j s(r, r-j) (pi i)^{2k} (2m-1)^{2k} E_{2k+r-j-1}(0),
    returned as (gamma_0, gamma_1, ...) with c_m = sum_k gamma_k pi^{2k}.
    """
    return _pi_coeffs(m, _order_r_weights(n, r))


def euler_order2_cm_pi_coeffs(m: int, n: int) -> tuple:
    """c_m(n, 2) = 1/2 + sum_{1<=k<=n/2} (pi i)^{2k} (2m-1)^{2k} E_{2k+1}(0), as pi^{2k} coefficients."""
    return _pi_coeffs(m, _order2_weights(n))


def euler_order_cm(m: int, n: int, r: int) -> complex:
    return complex(sum(float(g) * math.pi ** (2 * k) for k, g in enumerate(euler_order_cm_pi_coeffs(m, n, r))))


def euler_order_r_fourier(n: int, r: int, x, M: int, variant: str = DERIVED) -> FourierEvaluation:
    """Fourier partial sum for E_n^{(r)}(x) on 0 < x < r.

    ``literal`` uses the printed prefactor 2^r/(r-1)! n!/(2 pi i)^{n+1} and
    the printed c_m(n, r); ``literal-order2`` uses the separately printed
    c_m(n, 2); ``derived`` goes through :func:`appell_fourier` with the
    odd-remainder decomposition of (2/(e^t+1))^r at a = r.  The exact
    reference is the oracle E_n^{(r)}(x) in every case.
    """
    x = as_rational(x)
    if r < 1:
        raise DomainError("order r must be >= 1")
    if n < 0:
        raise DomainError("n must be non-negative")
    if not 0 < x < r:
        raise DomainError(f"x={x} outside 0 < x < r = {r}")
    if variant not in VARIANTS:
        raise ValueError(f"variant must be one of {VARIANTS}")
    exact = poly_eval(higher_oracle_polys("euler", r, n)[n], x)
    if variant == DERIVED:
        d = decompose(euler_f_series(r, False, n), r, ODD)
        ev = appell_fourier(d, n, x, M)
        return _evaluation(n, x, M, complex(ev.partial_sum, ev.imag_residue), exact)
    if variant == LITERAL_ORDER2:
        if r != 2:
            raise DomainError("literal-order2 is only defined for r = 2")
        betas = _order2_weights(n)
    else:
        betas = _order_r_weights(n, r)
    # (pi i)^{2k} (2m-1)^{2k} = (2 pi i u)^{2k} with u = m - 1/2
    alphas = {2 * k: float(b) * TWO_PI_I ** (2 * k) for k, b in enumerate(betas) if b}
    pref = 2**r / math.factorial(r - 1) * math.factorial(n) / TWO_PI_I ** (n + 1)
    value = pref * _half_integer_sum(alphas, n, float(x / r), M)
    return _evaluation(n, x, M, value, exact)


def convergence_probe(target: Callable[[Fraction, int], FourierEvaluation], x, M_list: Sequence[int]) -> list:
    """Evaluate ``target(x, M)`` for each M; M_list must be strictly increasing."""
    M_list = list(M_list)
    if any(b <= a for a, b in zip(M_list, M_list[1:])):
        raise ValueError("M_list must be strictly increasing")
    x = as_rational(x)
    return [target(x, M) for M in M_list]


def grid_points(lo, hi, K: int, open_lo: bool, open_hi: bool) -> list:
    """K+1 equally spaced rationals across [lo, hi], nudged inward at open ends."""
    lo, hi = as_rational(lo), as_rational(hi)
    if K < 1:
        return [(lo + hi) / 2]
    if open_lo or open_hi:
        step = (hi - lo) / (K + 2)
        return [lo + (i + 1) * step for i in range(K + 1)]
    step = (hi - lo) / K
    return [lo + i * step for i in range(K + 1)]


def validate_fourier(r: int, max_n: int, variant: str = LITERAL, M: int = 10**4, x=None, tol: float = 1e-3):
    """Compare an order-r Euler expansion with the oracle for n <= max_n.

    A value matches when |partial sum - exact| <= tol * (1 + |exact|).
    """
    from .higher import Mismatch, ValidationReport

    x = as_rational(x) if x is not None else Fraction(r, 3)
    variant = LITERAL_ORDER2 if variant == "order2" else variant
    matches, mismatches = {}, []
    for n in range(max_n + 1):
        if variant == LITERAL_ORDER2 and n < 2:
            continue
        ev = euler_order_r_fourier(n, r, x, M, variant)
        ok = ev.abs_error <= tol * (1 + abs(float(ev.exact_value)))
        matches[n] = ok
        if not ok:
            mismatches.append(Mismatch(n, (ev.partial_sum,), (ev.exact_value,)))
    notes = (f"x={format_rational(x)}, M={M}, tol={tol:g} relative to 1+|exact|",)
    return ValidationReport("euler", r, max_n, f"fourier-{variant}", matches, tuple(mismatches), notes)
