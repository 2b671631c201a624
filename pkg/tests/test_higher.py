from fractions import Fraction as F

import pytest
from oracles import bernoulli_numbers, euler_zero_values, order_r_numbers

from appell.classical import bernoulli_polynomial, euler_polynomial
from appell.exact import DomainError, Polynomial, poly_compose_affine
from appell.higher import (
    BERNOULLI_FORMULAS,
    EULER_FORMULAS,
    ValidationReport,
    bernoulli_higher_number,
    bernoulli_higher_poly_decomp,
    bernoulli_higher_poly_stirling,
    bernoulli_higher_poly_stirling_derived,
    bernoulli_order2_poly,
    bernoulli_order3_poly,
    bernoulli_order3_poly_basic,
    bernoulli_order3_poly_refined,
    euler_higher_number,
    euler_higher_poly_decomp,
    euler_higher_poly_stirling,
    euler_order2_poly,
    formula_ids,
    validate_formula,
    validate_formulas,
)
from appell.oracle import bernoulli_f_series, euler_f_series, higher_oracle_polys
from appell.symmetry import EVEN, ODD, decompose

N = 30
BERN = bernoulli_numbers(N)
EUL0 = euler_zero_values(N + 5)


class TestNumbers:
    def test_examples(self):
        assert bernoulli_higher_number(1, 2) == -1
        assert bernoulli_higher_number(2, 2) == F(5, 6)
        assert euler_higher_number(0, 2) == 1
        assert euler_higher_number(1, 2) == -1

    @pytest.mark.parametrize("r", [1, 2, 3, 4, 5])
    def test_against_convolution(self, r):
        assert [bernoulli_higher_number(n, r) for n in range(N + 1)] == order_r_numbers(BERN, r)
        assert [euler_higher_number(n, r) for n in range(N + 1)] == order_r_numbers(EUL0[: N + 1], r)

    def test_r1_is_classical(self):
        assert [bernoulli_higher_number(n, 1) for n in range(N + 1)] == BERN
        assert [euler_higher_number(n, 1) for n in range(N + 1)] == EUL0[: N + 1]

    def test_bad_arguments(self):
        with pytest.raises(DomainError):
            bernoulli_higher_number(3, 0)
        with pytest.raises(DomainError):
            euler_higher_number(-1, 2)


class TestPolynomialForms:
    @pytest.mark.parametrize("r", [1, 2, 3, 4, 5])
    def test_decomp_equals_oracle(self, r):
        bo = higher_oracle_polys("bernoulli", r, N)
        eo = higher_oracle_polys("euler", r, N)
        for n in range(N + 1):
            assert bernoulli_higher_poly_decomp(n, r) == bo[n]
            assert euler_higher_poly_decomp(n, r) == eo[n]

    def test_r1_reductions(self):
        for n in range(15):
            assert bernoulli_higher_poly_decomp(n, 1) == bernoulli_polynomial(n)
            assert euler_higher_poly_decomp(n, 1) == euler_polynomial(n)
            assert euler_higher_poly_stirling(n, 1) == euler_polynomial(n)

    def test_order2_examples(self):
        assert bernoulli_order2_poly(0) == Polynomial([1])
        assert bernoulli_order2_poly(2) == Polynomial([F(5, 6), -2, 1])

    def test_order3(self):
        bo = higher_oracle_polys("bernoulli", 3, 20)
        assert bernoulli_order3_poly(4) == bo[4]
        assert all(bernoulli_order3_poly(n) == bo[n] for n in range(21))
        assert all(bernoulli_order3_poly_basic(n) == bo[n] for n in range(21))

    def test_printed_refinement_is_off(self):
        bo = higher_oracle_polys("bernoulli", 3, 12)
        for n in range(4, 13):
            assert bernoulli_order3_poly_refined(n) != bo[n]
            assert bernoulli_order3_poly_refined(n, literal=False) == bo[n]
        with pytest.raises(DomainError):
            bernoulli_order3_poly_refined(3)

    def test_stirling_forms(self):
        bo = higher_oracle_polys("bernoulli", 4, 16)
        for r in (2, 4):
            o = higher_oracle_polys("bernoulli", r, 16)
            assert all(bernoulli_higher_poly_stirling(n, r) == o[n] for n in range(r, 17))
        for r in (2, 3, 4, 5):
            o = higher_oracle_polys("bernoulli", r, 16)
            assert all(bernoulli_higher_poly_stirling_derived(n, r) == o[n] for n in range(r, 17))
        assert bernoulli_higher_poly_stirling(4, 4) == bo[4]

    def test_printed_stirling_skips_index_for_odd_r(self):
        o = higher_oracle_polys("bernoulli", 3, 8)
        assert bernoulli_higher_poly_stirling(4, 3) != o[4]

    def test_stirling_domain(self):
        with pytest.raises(DomainError):
            bernoulli_higher_poly_stirling(1, 2)
        with pytest.raises(DomainError):
            bernoulli_higher_poly_stirling_derived(5, 1)

    def test_euler_order2(self):
        eo = higher_oracle_polys("euler", 2, 20)
        assert all(euler_order2_poly(n) == eo[n] for n in range(2, 21))
        with pytest.raises(DomainError):
            euler_order2_poly(1)

    @pytest.mark.parametrize("r", [2, 3])
    def test_derivative_of_matching_outputs(self, r):
        for fid, spec in {**BERNOULLI_FORMULAS}.items():
            if fid == "numbers":
                continue
            rep = validate_formula("bernoulli", fid, r, 12)
            for n, ok in rep.matches.items():
                if ok and n >= 1 and spec.applies(n - 1, r):
                    assert spec.build(n, r).derivative() == n * spec.build(n - 1, r)

    @pytest.mark.parametrize("r", [1, 2, 3, 4, 5])
    def test_inherited_symmetry(self, r):
        for kind in ("bernoulli", "euler"):
            ex = higher_oracle_polys(kind, r, N)
            for n in range(N + 1):
                assert poly_compose_affine(ex[n], -1, r) == (-1) ** n * ex[n]

    @pytest.mark.parametrize("r", [1, 2, 3, 4, 5])
    def test_remainder_parity(self, r):
        db = decompose(bernoulli_f_series(r, True, N), 1, EVEN)
        de = decompose(euler_f_series(r, True, N), 1, ODD)
        assert db.remainder_F.is_even()
        assert de.remainder_F.is_odd()
        # odd part of the scaled kernel carries r^{-2k-1} B_{2k+1}^{(r)}
        for k in range(N // 2):
            assert db.a_coeffs[2 * k + 1] == F(r) ** (-2 * k - 1) * bernoulli_higher_number(2 * k + 1, r)


class TestValidation:
    def test_formula_ids(self):
        assert "decomp" in formula_ids("bernoulli")
        assert "fourier-derived" in formula_ids("euler")
        assert "fourier-literal" not in formula_ids("bernoulli")

    def test_decomp_reports(self):
        rep = validate_formula("euler", "decomp", 3, 20)
        assert rep.all_match and rep.first_mismatch is None and len(rep.matches) == 21

    def test_mismatch_report(self):
        rep = validate_formula("bernoulli", "stirling", 3, 12)
        assert not rep.all_match
        mm = rep.first_mismatch
        assert mm.n == 3
        assert Polynomial(mm.oracle_coeffs) == higher_oracle_polys("bernoulli", 3, 3)[3]
        assert rep.notes

    def test_json_round_trip(self):
        rep = validate_formula("bernoulli", "order3-refined", 3, 8)
        data = rep.to_json()
        assert data["kind"] == "bernoulli" and data["formula"] == "order3-refined"
        assert data["mismatches"][0]["n"] == 4
        assert ValidationReport.from_json(data) == rep

    def test_unknown(self):
        with pytest.raises(ValueError):
            validate_formula("bernoulli", "nope", 2, 4)
        with pytest.raises(ValueError):
            validate_formula("bernoulli", "fourier-derived", 2, 4)

    def test_sweep(self):
        reps = validate_formulas("euler", 2, 6)
        ids = [r.formula_id for r in reps]
        assert {"numbers", "decomp", "stirling", "order2"} <= set(ids)

    def test_fourier_reports(self):
        lit = validate_formula("euler", "fourier-literal", 2, 6, M=2000)
        der = validate_formula("euler", "fourier-derived", 2, 6, M=2000)
        assert der.all_match
        assert not lit.all_match

    def test_validation_does_not_mutate(self):
        before = dict(EULER_FORMULAS)
        validate_formulas("euler", 3, 4)
        assert before == EULER_FORMULAS
