from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from lambdacl.bott import bott_checks, theta
from lambdacl.exact import LaurentPoly, series_invert


def test_theta_is_geometric_sum():
    assert theta(4).terms() == {0: 1, 1: 1, 2: 1, 3: 1}
    assert theta(1).terms() == {0: 1}


def test_example_k3_kp5():
    r = bott_checks(3, 5, 8)
    assert r.telescoping and r.inverse and r.passed and r.witnesses == {}


def test_theta3_inverse_coefficients():
    inv = series_invert(theta(3).to_series(3))
    assert inv.coeffs == (Fraction(1, 3), Fraction(-1, 3), Fraction(2, 9))


@given(st.integers(1, 6), st.integers(1, 8), st.integers(1, 12))
def test_identities_hold(k, kp, N):
    assert bott_checks(k, kp, N).passed


def test_telescoping_by_hand():
    # (1 + d)(1 + d^2 + d^4) = 1 + d + ... + d^5
    assert theta(2) * LaurentPoly.geometric(3, step=2) == LaurentPoly.geometric(6)


def test_rejects_nonpositive():
    with pytest.raises(ValueError):
        bott_checks(0, 2, 4)
