from fractions import Fraction as F

import pytest
from conftest import assert_canonical_poly, canonical, nonzero_rationals, polynomials, series, small_rationals
from hypothesis import given, settings
from oracles import bernoulli_numbers, exp_by_powers

from appell.exact import (
    DomainError,
    Polynomial,
    TruncatedSeries,
    format_rational,
    parse_rational,
    poly_add,
    poly_compose_affine,
    poly_derivative,
    poly_eval,
    poly_mul,
    series_exp,
    series_mul,
    series_parity_parts,
    series_pow_int,
    series_reciprocal,
)
from appell.oracle import bernoulli_kernel

X = Polynomial.x()
B2 = Polynomial([F(1, 6), -1, 1])


class TestRationalText:
    @pytest.mark.parametrize("text,value", [("-1/30", F(-1, 30)), ("7", F(7)), ("4/6", F(2, 3)), (" -3 ", F(-3))])
    def test_parse(self, text, value):
        assert parse_rational(text) == value

    @pytest.mark.parametrize("text", ["0.5", "1/0", "abc", "1e3", ""])
    def test_parse_rejects(self, text):
        with pytest.raises(ValueError):
            parse_rational(text)

    def test_format(self):
        assert format_rational(F(-1, 30)) == "-1/30"
        assert format_rational(F(6, 3)) == "2"

    @given(small_rationals)
    def test_round_trip(self, q):
        assert parse_rational(format_rational(q)) == q


class TestPolynomial:
    def test_zero_encoding(self):
        assert Polynomial().coeffs == ()
        assert Polynomial([0, 0]).coeffs == ()
        assert Polynomial().degree == -1

    def test_add_examples(self):
        assert poly_add(X - F(1, 2), Polynomial([F(1, 2)])) == X
        assert poly_add(B2, Polynomial()) == B2
        assert poly_add(B2, X - F(1, 6)) == Polynomial.monomial(2)

    def test_mul_examples(self):
        assert poly_mul(X, X) == Polynomial.monomial(2)
        assert poly_mul(X - F(1, 2), X - F(1, 2)) == Polynomial([F(1, 4), -1, 1])
        assert poly_mul(B2, Polynomial()).is_zero()

    def test_compose_affine_examples(self):
        assert poly_compose_affine(X - F(1, 2), F(1, 2), 0) == Polynomial([F(-1, 2), F(1, 2)])
        assert poly_compose_affine(B2, 1, 0) == B2
        assert poly_compose_affine(B2, -1, 1) == B2

    def test_eval_examples(self):
        assert poly_eval(B2, F(1, 2)) == F(-1, 12)
        assert poly_eval(B2, 0) == F(1, 6)
        assert poly_eval(Polynomial([0, -1, 1]), F(1, 3)) == F(-2, 9)

    def test_derivative_examples(self):
        assert poly_derivative(B2) == Polynomial([-1, 2])
        assert poly_derivative(Polynomial([5])).is_zero()
        b3 = Polynomial([0, F(1, 2), F(-3, 2), 1])
        assert poly_derivative(b3) == 3 * B2

    def test_str(self):
        assert str(B2) == "x^2 - x + 1/6"
        assert str(Polynomial()) == "0"

    def test_json_round_trip(self):
        assert B2.to_json() == {"coeffs": ["1/6", "-1", "1"]}
        assert Polynomial.from_json(B2.to_json()) == B2

    def test_floats_refused(self):
        with pytest.raises(TypeError):
            Polynomial([0.5])

    @settings(max_examples=100)
    @given(polynomials(), polynomials(), polynomials())
    def test_ring_axioms(self, p, q, s):
        assert p + q == q + p
        assert p * q == q * p
        assert (p + q) + s == p + (q + s)
        assert (p * q) * s == p * (q * s)
        assert p * (q + s) == p * q + p * s
        for r in (p + q, p * q, p * (q + s)):
            assert_canonical_poly(r)

    @settings(max_examples=100)
    @given(polynomials(), polynomials())
    def test_degree_of_product(self, p, q):
        if not p.is_zero() and not q.is_zero():
            assert (p * q).degree == p.degree + q.degree

    @settings(max_examples=100)
    @given(polynomials(), nonzero_rationals, small_rationals)
    def test_affine_inverse(self, p, alpha, beta):
        q = poly_compose_affine(p, alpha, beta)
        assert poly_compose_affine(q, 1 / alpha, -beta / alpha) == p

    @settings(max_examples=100)
    @given(polynomials(), nonzero_rationals, small_rationals, small_rationals)
    def test_affine_matches_pointwise(self, p, alpha, beta, x):
        assert poly_eval(poly_compose_affine(p, alpha, beta), x) == poly_eval(p, alpha * x + beta)


class TestSeries:
    def test_length_and_no_trim(self):
        s = TruncatedSeries([1, 0, 0], 2)
        assert s.order == 2 and s.coeffs == (1, 0, 0)

    def test_mismatched_orders_truncate(self):
        s = TruncatedSeries([1, 1, 1, 1])
        t = TruncatedSeries([1, 2])
        assert (s * t).order == 1
        assert (s + t).coeffs == (2, 3)

    def test_mul_examples(self):
        s = TruncatedSeries([3, 1, 4, 1])
        assert series_mul(s, TruncatedSeries.one(3)) == s
        assert series_mul(TruncatedSeries([1, 1, 0]), TruncatedSeries([1, -1, 0])) == TruncatedSeries([1, 0, -1])

    def test_reciprocal_examples(self):
        assert series_reciprocal(TruncatedSeries.one(4)) == TruncatedSeries.one(4)
        assert series_reciprocal(TruncatedSeries([1, 1, 0, 0])) == TruncatedSeries([1, -1, 1, -1])

    def test_reciprocal_is_bernoulli_oracle(self):
        N = 20
        from math import factorial

        s = TruncatedSeries(F(1, factorial(k + 1)) for k in range(N + 1))
        r = series_reciprocal(s)
        assert r.exponential_coeffs() == bernoulli_numbers(N)
        assert series_mul(s, r) == TruncatedSeries.one(N)

    def test_reciprocal_domain_error(self):
        with pytest.raises(DomainError, match="zero constant term"):
            series_reciprocal(TruncatedSeries([0, 1]))

    def test_exp_examples(self):
        assert series_exp(TruncatedSeries([0, 0, 0])) == TruncatedSeries.one(2)
        assert series_exp(TruncatedSeries.variable(3)) == TruncatedSeries([1, 1, F(1, 2), F(1, 6)])
        t = TruncatedSeries.variable(10)
        assert series_mul(series_exp(t), series_exp(-t)) == TruncatedSeries.one(10)

    def test_exp_domain_error(self):
        with pytest.raises(DomainError):
            series_exp(TruncatedSeries([1, 1]))

    def test_pow_examples(self):
        s = TruncatedSeries([2, 3, 5])
        assert series_pow_int(s, 1) == s
        assert series_pow_int(TruncatedSeries([1, 1, 0]), 2) == TruncatedSeries([1, 2, 1])

    def test_pow_order_two_bernoulli(self):
        a = series_pow_int(bernoulli_kernel(4), 2).exponential_coeffs()
        assert a[:3] == [1, -1, F(5, 6)]

    def test_parity_examples(self):
        even, odd = series_parity_parts(TruncatedSeries([1, 1]))
        assert even == TruncatedSeries([1, 0]) and odd == TruncatedSeries([0, 1])
        even, _ = series_parity_parts(TruncatedSeries([0, 1, 0, 5]))
        assert all(c == 0 for c in even.coeffs)
        _, odd = series_parity_parts(bernoulli_kernel(15))
        assert odd == TruncatedSeries([0, F(-1, 2)], 15)

    def test_exponential_view_round_trip(self):
        a = [1, F(-1, 2), F(1, 6), 0, F(-1, 30)]
        assert TruncatedSeries.from_exponential(a).exponential_coeffs() == a

    def test_json_round_trip(self):
        s = bernoulli_kernel(6)
        assert TruncatedSeries.from_json(s.to_json()) == s

    @settings(max_examples=100)
    @given(series(), series(), series())
    def test_ring_axioms(self, s, t, u):
        assert s * t == t * s
        assert (s * t) * u == s * (t * u)
        assert s * (t + u) == s * t + s * u
        assert all(canonical(c) for c in (s * (t + u)).coeffs)

    @settings(max_examples=100)
    @given(series(unit=True))
    def test_reciprocal_property(self, s):
        assert s * series_reciprocal(s) == TruncatedSeries.one(s.order)

    @settings(max_examples=100)
    @given(series(order=6, zero_constant=True), series(order=6, zero_constant=True))
    def test_exp_homomorphism(self, s, u):
        assert series_exp(s + u) == series_exp(s) * series_exp(u)

    @settings(max_examples=60)
    @given(series(order=6, zero_constant=True))
    def test_exp_matches_power_sum(self, s):
        assert list(series_exp(s).coeffs) == exp_by_powers(list(s.coeffs), s.order)
