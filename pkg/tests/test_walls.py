import itertools
import math
import random
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tiltgenus.chern import ideal_sheaf_char
from tiltgenus.exactnum import QuadNum
from tiltgenus.tilt import TiltPoint, compare_nu
from tiltgenus.walls import (
    Candidate,
    DegenerateWallError,
    enumerate_destabilizers,
    rank_bound,
    strict_destabilizers,
    wall_elimination,
    wall_expression,
    wall_family,
    wall_of,
)


def conic_point(d: int, t: Fraction) -> TiltPoint:
    # rational parametrisation of w^2 + 2u^2 = 4, scaled by sqrt(d)
    u = 4 * t / (t * t + 2)
    w = (4 - 2 * t * t) / (t * t + 2)
    return TiltPoint(QuadNum(0, u, d), QuadNum(0, -w, d))


@settings(max_examples=100)
@given(
    st.integers(1, 12),
    st.integers(1, 40),
    st.fractions(min_value=0, max_value=10, max_denominator=8),
    st.fractions(min_value=-20, max_value=-Fraction(1, 8), max_denominator=8),
)
def test_line_bundle_wall_factorisation(l, d, alpha, beta):
    p = TiltPoint(alpha, beta)
    expr = wall_expression(Candidate.of(1, -l, Fraction(l * l, 2)), d, p)
    assert expr == Fraction(-l, 2) * (alpha ** 2 + (beta + l) * (beta + Fraction(2 * d, l)))


def test_wall_expression_examples():
    p = TiltPoint(Fraction(3, 2), -5)
    assert wall_expression(Candidate.of(1, 0, -7), 7, p) == 0
    assert wall_expression(Candidate.of(1, -3, Fraction(9, 2)), 9, TiltPoint(0, -6)) == 0


def test_wall_of_examples():
    w = wall_of(Candidate.of(1, -3, Fraction(9, 2)), 9)
    assert (w.center_x, w.radius_sq) == (Fraction(-9, 2), Fraction(9, 4))
    w = wall_of(Candidate.of(1, -1, Fraction(1, 2)), 2)
    assert (w.center_x, w.radius_sq) == (Fraction(-5, 2), Fraction(9, 4))
    # (c + r d)^2 < 2 d theta^2
    assert wall_of(Candidate.of(1, -2, -3), 4) is None
    with pytest.raises(DegenerateWallError):
        wall_of(Candidate.of(1, 0, -4), 4)


@pytest.mark.parametrize("d, k", [(9, 3), (9, 2), (10, 3), (26, 5), (5, 1)])
def test_line_bundle_wall_touches_critical_line(d, k):
    wall = wall_of(Candidate.of(1, -k, Fraction(k * k, 2)), d)
    assert wall.alpha_sq_at(Fraction(-2 * d, k)) == 0


@pytest.mark.parametrize("d", [2, 5, 9, 16])
def test_walls_are_disjoint(d):
    family = wall_family(d, 2, range(-8, 0))
    circles = {(w.center_x, w.radius_sq) for _, w in family}
    assert len(circles) > 3
    for (x1, r1), (x2, r2) in itertools.combinations(circles, 2):
        from tiltgenus.walls import WallCircle

        beta, alpha_sq = wall_elimination(WallCircle(x1, r1), WallCircle(x2, r2))
        assert beta == 0 and alpha_sq == -2 * d


def test_rank_bound_on_conic():
    assert rank_bound(TiltPoint(2, 0), 2) == 2
    rng = random.Random(7)
    for _ in range(50):
        d = rng.randint(1, 60)
        t = Fraction(rng.randint(1, 40), rng.randint(1, 40))
        p = conic_point(d, t)
        assert 2 * p.alpha_sq + p.beta * p.beta == 4 * d
        bound = rank_bound(p, d)
        assert bound == 2
        assert bound.collapse() == 2


def test_rank_bound_inside_region():
    bound = rank_bound(TiltPoint(3, -2), 4)
    assert bound < 2
    # independent high-precision evaluation
    a2, b2, d = 9, 4, 4
    value = ((a2 - b2 + 2 * d) + mpmath.sqrt((b2 - a2 - 2 * d) ** 2 + 4 * a2 * b2)) / (2 * a2)
    assert abs(float(bound) - float(value)) < 1e-12
    assert bound > Fraction(int(value * 10 ** 6), 10 ** 6)
    with pytest.raises(ValueError):
        rank_bound(TiltPoint(0, -3), 4)


@settings(max_examples=25, deadline=None)
@given(
    st.integers(1, 12),
    st.fractions(min_value=Fraction(1, 4), max_value=6, max_denominator=4),
    st.fractions(min_value=-9, max_value=-Fraction(1, 2), max_denominator=4),
)
def test_strict_destabilizers_respect_rank_bound(d, alpha, beta):
    p = TiltPoint(alpha, beta)
    bound = rank_bound(p, d)
    for s in strict_destabilizers(enumerate_destabilizers(d, p, 3)):
        assert bound > s.candidate.r


def test_enumeration_by_hand_d2():
    p = TiltPoint(1, -1)
    found = enumerate_destabilizers(2, p, 1)
    assert [(s.candidate.two_c, s.comparison) for s in found] == [(-4, 0), (-2, 1), (0, 1)]
    assert all(s.candidate.theta == 0 for s in found)
    # no surface of degree < 1 is vacuous, but W must contain C when l = 0
    found = enumerate_destabilizers(2, p, 1, k=1)
    assert [s.candidate for s in found] == [Candidate(1, 0, -4)]


def test_enumeration_d9_on_critical_line():
    found = enumerate_destabilizers(9, TiltPoint(1, -9), 2, k=2)
    assert not strict_destabilizers(found)
    assert [s.candidate for s in found] == [Candidate(1, 0, -18)]
    # without the surface-degree input O(-1) destabilizes numerically
    loose = strict_destabilizers(enumerate_destabilizers(9, TiltPoint(1, -9), 1))
    assert Candidate.of(1, -1, Fraction(1, 2)) in [s.candidate for s in loose]


def test_enumeration_rank_one_suffices_past_conic():
    # 2 alpha^2 + beta^2 >= 4d: every strict destabilizer has rank one
    d, p = 6, TiltPoint(2, -4)
    assert 2 * p.alpha_sq + p.beta ** 2 >= 4 * d
    found = strict_destabilizers(enumerate_destabilizers(d, p, 4))
    assert found and {s.candidate.r for s in found} == {1}


def test_enumeration_is_complete_against_brute_force():
    d, p = 5, TiltPoint(Fraction(1, 2), Fraction(-7, 2))
    ideal = ideal_sheaf_char(d, 0)
    expected = []
    for r in (1, 2):
        for theta in range(-20, 1):
            for two_c in range(-120, 121):
                if (theta + two_c) % 2:
                    continue
                cand = Candidate(r, theta, two_c)
                if not (cand.in_heart(p.beta) and cand.satisfies_bg()):
                    continue
                if compare_nu(cand.as_chern(), ideal, p) >= 0:
                    expected.append(cand)
    found = [s.candidate for s in enumerate_destabilizers(d, p, 2)]
    assert found == sorted(expected)


@pytest.mark.parametrize(
    "d, p",
    [
        (9, TiltPoint(1, -9)),
        (5, TiltPoint(Fraction(1, 2), QuadNum(0, -2, 5))),
        (7, TiltPoint(Fraction(1, 3), Fraction(-5, 2))),
    ],
)
def test_wall_expression_sign_matches_slopes(d, p):
    ideal = ideal_sheaf_char(d, 0)
    for s in enumerate_destabilizers(d, p, 2):
        assert s.expression.sign() == s.comparison
    rng = random.Random(d)
    checked = 0
    while checked < 200:
        r = rng.randint(1, 3)
        theta = rng.randint(math.floor(r * p.beta) + 1, math.floor((r - 1) * p.beta))
        two_c = rng.randint(-60, theta * theta // r)
        if (theta + two_c) % 2:
            continue
        cand = Candidate(r, theta, two_c)
        assert cand.in_heart(p.beta)
        expr = wall_expression(cand, d, p)
        assert expr.sign() == compare_nu(cand.as_chern(), ideal, p)
        checked += 1


def test_parallel_enumeration_is_identical():
    p = TiltPoint(Fraction(1, 2), Fraction(-7, 2))
    serial = enumerate_destabilizers(5, p, 3)
    parallel = enumerate_destabilizers(5, p, 3, workers=2)
    assert serial == parallel


def test_nonpositive_rank_window():
    p = TiltPoint(1, -3)
    with pytest.raises(ValueError):
        enumerate_destabilizers(4, p, 1, nonpositive_ranks=True)
    found = enumerate_destabilizers(4, p, 1, nonpositive_ranks=True, max_two_c=6)
    ranks = {s.candidate.r for s in found}
    assert 0 in ranks and -1 in ranks
    for s in found:
        assert s.candidate.in_heart(p.beta) and s.candidate.satisfies_bg()
        assert s.candidate.two_c <= 6 or s.candidate.r > 0


def test_enumeration_domain_errors():
    with pytest.raises(ValueError):
        enumerate_destabilizers(4, TiltPoint(1, 0), 1)
    with pytest.raises(ValueError):
        enumerate_destabilizers(4, TiltPoint(0, -1), 1)
