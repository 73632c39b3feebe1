import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tiltgenus.chern import ChernP3, ideal_sheaf_char, line_bundle, twist
from tiltgenus.exactnum import QuadNum
from tiltgenus.tilt import (
    ExtSlope,
    TiltPoint,
    bmt_quadratic,
    classical_bg_ok,
    compare_nu,
    discriminant,
    mu_slope,
    nu_slope,
)

betas = st.fractions(min_value=-30, max_value=30, max_denominator=12)
alphas = st.fractions(min_value=0, max_value=20, max_denominator=12)


@st.composite
def classes(draw):
    ch1 = draw(st.integers(-20, 20))
    two_ch2 = 2 * draw(st.integers(-40, 40)) + (ch1 % 2)
    return ChernP3(draw(st.integers(-5, 5)), ch1, two_ch2, draw(st.integers(-300, 300)))


def test_tilt_point_rejects_negative_alpha():
    with pytest.raises(ValueError):
        TiltPoint(-1, 0)
    TiltPoint(0, -3)


def test_mu_slope():
    assert mu_slope(ChernP3(0, 1, 1, 0), 5).is_infinite
    assert mu_slope(ChernP3(1, 0, 0, 0), 2) == -2
    beta = QuadNum(0, -2, 7)
    assert mu_slope(ideal_sheaf_char(7, 3), beta) == -beta


@settings(max_examples=100)
@given(st.integers(1, 50), st.integers(-50, 50), alphas, betas.filter(bool))
def test_nu_of_ideal_sheaf(d, chi, alpha, beta):
    p = TiltPoint(alpha, beta)
    expected = (Fraction(1, 2) * (beta ** 2 - alpha ** 2) - d) / (-beta)
    assert nu_slope(ideal_sheaf_char(d, chi), p) == expected


@settings(max_examples=100)
@given(st.integers(-12, 12), alphas, betas)
def test_nu_of_line_bundle(l, alpha, beta):
    p = TiltPoint(alpha, beta)
    slope = nu_slope(line_bundle(-l), p)
    if l + beta == 0:
        assert slope.is_infinite
    else:
        expected = (Fraction(1, 2) * (beta ** 2 - alpha ** 2) + beta * l + Fraction(l * l, 2)) / (-l - beta)
        assert slope == expected
        assert slope == (-Fraction(1, 2) * (l + beta) ** 2 + alpha ** 2 / 2) / (l + beta)


def test_nu_infinite_when_ch1_twisted_vanishes():
    assert nu_slope(ChernP3(1, -2, 4, 0), TiltPoint(1, -2)).is_infinite


def test_discriminant_examples():
    for m in range(-5, 6):
        assert discriminant(line_bundle(m)) == 0
    assert discriminant(ideal_sheaf_char(11, 4)) == 22
    assert discriminant(ChernP3(2, 0, 2, 0)) == -4


@settings(max_examples=200)
@given(classes(), betas)
def test_discriminant_is_independent_of_beta(v, beta):
    assert discriminant(twist(v, beta)) == discriminant(v)


def test_classical_bg():
    assert classical_bg_ok(line_bundle(3))
    assert classical_bg_ok(ideal_sheaf_char(4, 0))
    assert not classical_bg_ok(ChernP3(2, 0, 2, 0))


@settings(max_examples=100)
@given(st.integers(-10, 10), alphas, betas)
def test_line_bundles_sit_on_bmt_boundary(m, alpha, beta):
    assert bmt_quadratic(line_bundle(m), TiltPoint(alpha, beta)) == 0


def test_bmt_of_a_line():
    assert bmt_quadratic(ideal_sheaf_char(1, 1), TiltPoint(0, -1)) == 0


def test_bmt_expansion_for_ideal_sheaves():
    rng = random.Random(20160514)
    for _ in range(100):
        d, chi = rng.randint(1, 50), rng.randint(-100, 100)
        alpha = Fraction(rng.randint(0, 60), rng.randint(1, 9))
        beta = -Fraction(rng.randint(1, 90), rng.randint(1, 9))
        value = bmt_quadratic(ideal_sheaf_char(d, chi), TiltPoint(alpha, beta))
        assert value == 2 * alpha ** 2 * d + 4 * d * d + 2 * beta ** 2 * d + 6 * beta * (2 * d - chi)


def test_bmt_expansion_over_quadratic_field():
    d = 13
    beta = QuadNum(0, -2, d)
    alpha = QuadNum(1, Fraction(1, 3), d)
    p = TiltPoint(alpha, beta)
    value = bmt_quadratic(ideal_sheaf_char(d, -5), p)
    assert value == 2 * alpha * alpha * d + 4 * d * d + 2 * beta * beta * d + 6 * beta * (2 * d + 5)


@settings(max_examples=200)
@given(st.one_of(st.none(), st.fractions(-10, 10)), st.one_of(st.none(), st.fractions(-10, 10)))
def test_ext_slope_total_order(x, y):
    a = ExtSlope(None if x is None else QuadNum(x))
    b = ExtSlope(None if y is None else QuadNum(y))
    assert sum([a < b, a == b, a > b]) == 1
    assert a <= ExtSlope.infinite()


@settings(max_examples=200)
@given(classes(), classes(), alphas.filter(bool), betas)
def test_compare_nu_matches_division(v, w, alpha, beta):
    p = TiltPoint(alpha, beta)
    sv, sw = nu_slope(v, p), nu_slope(w, p)
    expected = (sv > sw) - (sv < sw)
    assert compare_nu(v, w, p) == expected
