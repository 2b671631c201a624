"""Exact scalars, dense polynomials and truncated power series over Q.

Scalars are :class:`fractions.Fraction`, which is always kept in lowest
terms with a positive denominator.  :class:`Polynomial` and
:class:`TruncatedSeries` are immutable; every operation returns a new value.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

Scalar = Union[int, Fraction]

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of an operation."""


def as_rational(value) -> Fraction:
    """Coerce ``value`` to a Fraction.  Floats and decimal strings are refused."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a rational")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


def parse_rational(text: str) -> Fraction:
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise ValueError(f"not a rational literal 'p/q' or integer: {text!r}")
    num, den = m.group(1), m.group(2)
    if den is not None and int(den) == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(int(num), int(den) if den is not None else 1)


def format_rational(q: Scalar) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def is_canonical(q) -> bool:
    """True if ``q`` is an exact rational in lowest terms with positive denominator."""
    if isinstance(q, bool):
        return False
    if isinstance(q, int):
        return True
    if not isinstance(q, Fraction):
        return False
    return q.denominator > 0 and math.gcd(q.numerator, q.denominator) == 1


def binomial(n: int, k: int) -> int:
    """C(n, k), zero outside 0 <= k <= n."""
    if k < 0 or n < 0 or k > n:
        return 0
    return math.comb(n, k)


def _trim(coeffs: Iterable[Scalar]) -> tuple:
    out = [as_rational(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True)
class Polynomial:
    """Dense univariate polynomial; ``coeffs[k]`` is the coefficient of x^k.

    The zero polynomial is the empty tuple and has degree -1.
    """

    coeffs: tuple = ()

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        object.__setattr__(self, "coeffs", _trim(coeffs))

    @classmethod
    def constant(cls, c: Scalar) -> "Polynomial":
        return cls([c])

    @classmethod
    def x(cls) -> "Polynomial":
        return cls([0, 1])

    @classmethod
    def monomial(cls, n: int, c: Scalar = 1) -> "Polynomial":
        return cls([0] * n + [c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(as_rational(other))
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(self.coeff(k) + other.coeff(k) for k in range(n))

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(as_rational(other))
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            c = as_rational(other)
            return Polynomial(c * a for a in self.coeffs)
        if self.is_zero() or other.is_zero():
            return Polynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __truediv__(self, c):
        c = as_rational(c)
        if c == 0:
            raise ZeroDivisionError("polynomial divided by zero")
        return Polynomial(a / c for a in self.coeffs)

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative polynomial power")
        out = Polynomial.constant(1)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __call__(self, x):
        return poly_eval(self, x)

    def derivative(self) -> "Polynomial":
        return Polynomial(k * c for k, c in enumerate(self.coeffs) if k)

    def compose_affine(self, alpha, beta) -> "Polynomial":
        return poly_compose_affine(self, alpha, beta)

    def to_json(self) -> dict:
        return {"coeffs": [format_rational(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: dict) -> "Polynomial":
        return cls(parse_rational(c) for c in data["coeffs"])

    def __str__(self):
        if self.is_zero():
            return "0"
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            if mono and abs(c) == 1:
                body = mono
            else:
                body = format_rational(abs(c)) + (f"*{mono}" if mono else "")
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        first_sign, first = terms[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text


def poly_add(p: Polynomial, q: Polynomial) -> Polynomial:
    return p + q


def poly_mul(p: Polynomial, q: Polynomial) -> Polynomial:
    return p * q


def poly_eval(p: Polynomial, x) -> Fraction:
    x = as_rational(x)
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


def poly_derivative(p: Polynomial) -> Polynomial:
    return p.derivative()


def poly_compose_affine(p: Polynomial, alpha, beta) -> Polynomial:
    """Return q with q(x) = p(alpha*x + beta), by Horner over polynomials."""
    lin = Polynomial([as_rational(beta), as_rational(alpha)])
    acc = Polynomial()
    for c in reversed(p.coeffs):
        acc = acc * lin + c
    return acc


@dataclass(frozen=True)
class TruncatedSeries:
    """Power series jet sum_{k<=order} c_k t^k + O(t^{order+1}).

    Binary operations between series of different orders truncate to the
    smaller order.
    """

    coeffs: tuple

    def __init__(self, coeffs: Iterable[Scalar], order: int | None = None):
        cs = [as_rational(c) for c in coeffs]
        if order is not None:
            if order < 0:
                raise ValueError("series order must be non-negative")
            cs = (cs + [Fraction(0)] * (order + 1))[: order + 1]
        if not cs:
            raise ValueError("a truncated series needs at least one coefficient")
        object.__setattr__(self, "coeffs", tuple(cs))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls([1], order)

    @classmethod
    def variable(cls, order: int) -> "TruncatedSeries":
        return cls([0, 1], order)

    @classmethod
    def from_exponential(cls, a: Sequence[Scalar], order: int | None = None) -> "TruncatedSeries":
        """Build from exponential coefficients a_k, i.e. sum a_k t^k / k!."""
        return cls((as_rational(c) / math.factorial(k) for k, c in enumerate(a)), order)

    def exponential_coeffs(self) -> list:
        """Return a_k = k! * c_k for every stored k."""
        return [c * math.factorial(k) for k, c in enumerate(self.coeffs)]

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise DomainError(f"cannot extend a series of order {self.order} to order {order}")
        return TruncatedSeries(self.coeffs[: order + 1])

    def _coerce(self, other) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            return other
        return TruncatedSeries([as_rational(other)], self.order)

    def __add__(self, other):
        other = self._coerce(other)
        n = min(self.order, other.order)
        return TruncatedSeries(a + b for a, b in zip(self.coeffs[: n + 1], other.coeffs))

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            c = as_rational(other)
            return TruncatedSeries(c * a for a in self.coeffs)
        return series_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, r: int):
        return series_pow_int(self, r)

    def scale_argument(self, c) -> "TruncatedSeries":
        """Series of s(c*t): coefficient k is multiplied by c^k."""
        c = as_rational(c)
        return TruncatedSeries(a * c**k for k, a in enumerate(self.coeffs))

    def reflect(self) -> "TruncatedSeries":
        """Series of s(-t)."""
        return self.scale_argument(-1)

    def is_even(self) -> bool:
        return all(c == 0 for c in self.coeffs[1::2])

    def is_odd(self) -> bool:
        return all(c == 0 for c in self.coeffs[0::2])

    def to_json(self) -> dict:
        return {"order": self.order, "coeffs": [format_rational(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: dict) -> "TruncatedSeries":
        return cls([parse_rational(c) for c in data["coeffs"]], int(data["order"]))


def series_mul(s: TruncatedSeries, t: TruncatedSeries) -> TruncatedSeries:
    n = min(s.order, t.order)
    a, b = s.coeffs, t.coeffs
    out = []
    for k in range(n + 1):
        acc = Fraction(0)
        for i in range(k + 1):
            if a[i] and b[k - i]:
                acc += a[i] * b[k - i]
        out.append(acc)
    return TruncatedSeries(out)


def series_reciprocal(s: TruncatedSeries) -> TruncatedSeries:
    c0 = s.coeffs[0]
    if c0 == 0:
        raise DomainError(f"series with zero constant term has no reciprocal: {s.coeffs[:4]}...")
    inv0 = 1 / c0
    r = [inv0]
    for n in range(1, s.order + 1):
        acc = Fraction(0)
        for k in range(1, n + 1):
            if s.coeffs[k]:
                acc += s.coeffs[k] * r[n - k]
        r.append(-acc * inv0)
    return TruncatedSeries(r)


def series_exp(s: TruncatedSeries) -> TruncatedSeries:
    # E' = S'E  =>  n e_n = sum_{k=1}^n k s_k e_{n-k}
    if s.coeffs[0] != 0:
        raise DomainError("series_exp needs a zero constant term")
    e = [Fraction(1)]
    for n in range(1, s.order + 1):
        acc = Fraction(0)
        for k in range(1, n + 1):
            if s.coeffs[k]:
                acc += k * s.coeffs[k] * e[n - k]
        e.append(acc / n)
    return TruncatedSeries(e)


def series_pow_int(s: TruncatedSeries, r: int) -> TruncatedSeries:
    if r < 1:
        raise ValueError("series_pow_int needs a positive exponent")
    out = None
    base = s
    while r:
        if r & 1:
            out = base if out is None else series_mul(out, base)
        r >>= 1
        if r:
            base = series_mul(base, base)
    return out


def series_parity_parts(s: TruncatedSeries) -> tuple:
    """Split into (even part, odd part)."""
    even = TruncatedSeries(c if k % 2 == 0 else 0 for k, c in enumerate(s.coeffs))
    odd = TruncatedSeries(c if k % 2 else 0 for k, c in enumerate(s.coeffs))
    return even, odd


def exp_series(order: int, scale: Scalar = 1) -> TruncatedSeries:
    """Taylor jet of e^{scale*t}."""
    scale = as_rational(scale)
    return TruncatedSeries(scale**k / math.factorial(k) for k in range(order + 1))
