import math
import sys
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from appell.exact import Polynomial, TruncatedSeries  # noqa: E402

small_rationals = st.builds(
    Fraction, st.integers(min_value=-9, max_value=9), st.integers(min_value=1, max_value=6)
)
nonzero_rationals = small_rationals.filter(lambda q: q != 0)


def polynomials(max_degree=12):
    return st.lists(small_rationals, max_size=max_degree + 1).map(Polynomial)


def series(order=8, unit=False, zero_constant=False):
    def build(cs):
        if unit and cs[0] == 0:
            cs = [Fraction(1)] + cs[1:]
        if zero_constant:
            cs = [Fraction(0)] + cs[1:]
        return TruncatedSeries(cs)

    return st.lists(small_rationals, min_size=order + 1, max_size=order + 1).map(build)


def canonical(q):
    return isinstance(q, Fraction) and q.denominator > 0 and math.gcd(q.numerator, q.denominator) == 1


def assert_canonical_poly(p):
    assert all(canonical(c) for c in p.coeffs)
    assert not p.coeffs or p.coeffs[-1] != 0


@pytest.fixture
def x_poly():
    return Polynomial.x()
