from fractions import Fraction

import pytest

from zktheta.errors import IndexOutOfRange
from zktheta.modforms import (
    delta24,
    eisenstein_e4,
    h_series,
    sigma3,
    theta1,
    theta_f,
)
from zktheta.series import FracSeries, mul, power


def test_sigma3_small():
    assert sigma3(1) == 1
    assert sigma3(2) == 9
    assert sigma3(4) == 73
    assert sigma3(5) == 126


def test_e4_leading_coefficients():
    assert eisenstein_e4(5).coeffs == [1, 240, 2160, 6720, 17520]


def test_e4_coefficient_formula():
    assert eisenstein_e4(6).coeff_at(5) == 240 * sigma3(5) == 30240


def test_e4_constant_only():
    assert eisenstein_e4(1).coeffs == [1]


def brute_delta(T):
    """Direct convolution expansion of t * prod (1 - t^m)^24."""
    prod = [1] + [0] * (T - 2)
    for m in range(1, T - 1):
        for _ in range(24):
            nxt = list(prod)
            for e in range(len(prod)):
                if prod[e] and e + m < len(prod):
                    nxt[e + m] -= prod[e]
            prod = nxt
    return [0] + prod


def test_delta_against_convolution_oracle():
    assert delta24(8).coeffs == brute_delta(8)
    assert delta24(8).coeffs[1:5] == [1, -24, 252, -1472]


def test_delta_no_constant():
    assert delta24(6).coeff_at(0) == 0


def test_h_leading_coefficients():
    assert h_series(4).coeffs == [1, 24, 324, 3200]


def test_h_is_inverse_of_eta_product():
    T = 40
    # prod (1 - t^m)^24 via the delta oracle shifted down by one
    eta24 = FracSeries(1, T, brute_delta(T + 1)[1:])
    assert mul(h_series(T), eta24) == FracSeries.constant(1, T)


def test_h_positive_coefficients():
    h = h_series(200)
    assert all(c > 0 for c in h.coeffs)


def test_theta_f_k1_class0():
    f0 = theta_f(1, 0, 5)
    assert f0.nonzero_terms() == [(0, 1), (4, 2), (16, 2)]


def test_theta_f_k2_class0():
    f0 = theta_f(2, 0, 11)
    # x in 4Z: exponents x^2/8 = 2, 8, ... on grid 1/8
    assert f0.nonzero_terms() == [(0, 1), (16, 2), (64, 2)]


def test_theta_f_k1_odd_class():
    f1 = theta_f(1, 1, 3)
    assert f1.coeff_at(Fraction(1, 4)) == 2
    assert f1.coeff_at(Fraction(9, 4)) == 2


def test_theta_f_midrange_single_count():
    # 0 < i < k: each positive x = +-i (mod 2k) appears once
    f1 = theta_f(3, 1, 3)
    assert f1.coeff_at(Fraction(1, 12)) == 1
    assert f1.coeff_at(Fraction(25, 12)) == 1


def test_theta_f_index_range():
    with pytest.raises(IndexOutOfRange):
        theta_f(2, 3, 5)


def test_theta_f_support_is_squares():
    for k in (1, 2, 3):
        for i in range(k + 1):
            f = theta_f(k, i, 6)
            for e, c in f.nonzero_terms():
                x = int(round(e ** 0.5))
                assert x * x == e
                assert x % (2 * k) in {i, 2 * k - i}


def test_theta1_counts_k1(r8_counts):
    assert theta1(1, 13).coeffs == r8_counts[:13]


def test_theta1_counts_k2(r8_counts):
    t = theta1(2, 13)
    for m in range(13):
        expected = r8_counts[m // 2] if m % 2 == 0 else 0
        assert t.coeff_index(m) == expected


def test_theta1_constant_term():
    for k in range(1, 7):
        assert theta1(k, 3).coeff_index(0) == 1


def test_theta1_equals_f0_pow8():
    for k in (1, 3):
        assert power(theta_f(k, 0, 6), 8) == theta1(k, 6).regrid(4 * k)
