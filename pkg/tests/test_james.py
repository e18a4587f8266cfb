from fractions import Fraction

import pytest

from jamesian.core import DomainError, UndefinedMatchup
from jamesian.james import (
    JAMES,
    james_gradient_direction,
    james_involution_partner,
    james_level_curve,
    james_p,
    james_partials,
    james_second_partials,
    log5_worth,
)

from conftest import NINTHS, TWENTIETHS


def exact_james(a, b):
    a, b = Fraction(a), Fraction(b)
    return a * (1 - b) / (a * (1 - b) + b * (1 - a))


def test_value_at_point_six_point_four():
    assert james_p(0.6, 0.4) == pytest.approx(9 / 13, abs=1e-12)
    assert exact_james(Fraction(3, 5), Fraction(2, 5)) == Fraction(9, 13)


@pytest.mark.parametrize("a", NINTHS)
def test_against_half_returns_own_percentage(a):
    assert james_p(a, 0.5) == pytest.approx(a, abs=1e-12)


def test_equal_strength():
    assert james_p(0.25, 0.25) == 0.5


def test_corner_undefined():
    with pytest.raises(UndefinedMatchup):
        james_p(1, 1)


def test_log5_worth():
    assert log5_worth(0.6, 0.5) == pytest.approx(0.75, abs=1e-15)
    for c in (0.1, 0.5, 3.0):
        assert log5_worth(0.5, c) == pytest.approx(c)
        for a in NINTHS:
            q = log5_worth(a, c)
            assert q / (q + c) == pytest.approx(a, abs=1e-12)
    with pytest.raises(DomainError):
        log5_worth(0.0)
    with pytest.raises(DomainError):
        log5_worth(0.5, 0.0)


@pytest.mark.parametrize("c", [0.5, 0.01, 2.0, 100.0])
def test_bradley_terry_with_any_reference_worth(c):
    for a in NINTHS:
        for b in NINTHS:
            qa, qb = log5_worth(a, c), log5_worth(b, c)
            assert qa / (qa + qb) == pytest.approx(james_p(a, b), abs=1e-12)


def test_partials_at_center():
    assert tuple(james_partials(0.5, 0.5)) == (1.0, -1.0)


def test_partials_vs_finite_differences():
    h = 1e-6
    for a in NINTHS:
        for b in NINTHS:
            da, db = james_partials(a, b)
            fa = (james_p(a + h, b) - james_p(a - h, b)) / (2 * h)
            fb = (james_p(a, b + h) - james_p(a, b - h)) / (2 * h)
            assert abs(da - fa) < 1e-6 and abs(db - fb) < 1e-6


@pytest.mark.parametrize("a", NINTHS)
def test_da_maximized_at_b_equal_a(a):
    bs = [i / 1000 for i in range(1, 1000)]
    best = max(bs, key=lambda b: james_partials(a, b).dP_da)
    assert best == pytest.approx(a, abs=1e-3)


def test_partials_reject_boundary():
    with pytest.raises(DomainError):
        james_partials(0.0, 0.5)


def test_second_partials():
    assert tuple(james_second_partials(0.5, 0.5)) == (0.0, 0.0, 0.0)
    assert james_second_partials(0.7, 0.3).d2P_dadb > 0
    assert james_second_partials(0.3, 0.7).d2P_dadb < 0


def test_second_partials_vs_finite_differences():
    h = 1e-4
    p = james_p
    for a in NINTHS:
        for b in NINTHS:
            s = james_second_partials(a, b)
            faa = (p(a + h, b) - 2 * p(a, b) + p(a - h, b)) / h ** 2
            fbb = (p(a, b + h) - 2 * p(a, b) + p(a, b - h)) / h ** 2
            fab = (p(a + h, b + h) - p(a + h, b - h) - p(a - h, b + h) + p(a - h, b - h)) / (4 * h * h)
            assert abs(s.d2P_da2 - faa) < 1e-4
            assert abs(s.d2P_db2 - fbb) < 1e-4
            assert abs(s.d2P_dadb - fab) < 1e-4


@pytest.mark.parametrize("b", NINTHS)
def test_concavity_sign(b):
    for a in NINTHS:
        d2 = james_second_partials(a, b).d2P_da2
        if b > 0.5:
            assert d2 > 0
        elif b < 0.5:
            assert d2 < 0


def test_gradient_direction():
    for a in NINTHS:
        ga, gb = james_gradient_direction(a, a)
        assert ga > 0 and ga == pytest.approx(-gb)
        ga, gb = james_gradient_direction(a, 1 - a)
        assert ga > 0 and ga == pytest.approx(-gb)
        for b in NINTHS:
            da, db = james_partials(a, b)
            ua, ub = james_gradient_direction(a, b)
            assert da / ua > 0
            assert da / ua == pytest.approx(db / ub, abs=1e-10)
    assert james_gradient_direction(0.0, 0.5) == (0.25, 0.0)
    for corner in [(0, 0), (0, 1), (1, 0), (1, 1)]:
        with pytest.raises(DomainError):
            james_gradient_direction(*corner)


def test_involution_partner():
    c = james_involution_partner(1 / 3, 1 / 4)
    assert c == pytest.approx(0.6, abs=1e-12)
    assert james_p(1 / 3, c) == pytest.approx(0.25, abs=1e-12)
    assert exact_james(Fraction(1, 3), Fraction(1, 4)) == Fraction(3, 5)
    assert exact_james(Fraction(1, 3), Fraction(3, 5)) == Fraction(1, 4)
    for a in NINTHS:
        assert james_involution_partner(a, 0.5) == pytest.approx(a)
        assert james_involution_partner(a, a) == pytest.approx(0.5)
    with pytest.raises(DomainError):
        james_involution_partner(0.0, 0.3)


def test_fixed_b_involution():
    for b in NINTHS:
        for a in NINTHS:
            c = 1 - james_p(a, b)
            assert james_p(c, b) == pytest.approx(1 - a, abs=1e-12)


def test_level_curve():
    for c in NINTHS:
        assert james_level_curve(c, c) == pytest.approx(0.5, abs=1e-15)
        for a in TWENTIETHS:
            assert james_p(a, james_level_curve(a, c)) == pytest.approx(c, abs=1e-12)
    for a in NINTHS:
        assert james_level_curve(a, 0.5) == pytest.approx(a, abs=1e-15)
    assert james_level_curve(0.8, 0.75) == pytest.approx(4 / 7, abs=1e-15)
    with pytest.raises(DomainError):
        james_level_curve(0.0, 0.5)
    with pytest.raises(DomainError):
        james_level_curve(0.5, 1.0)


def test_model_gradient_matches_partials():
    assert JAMES.grad(0.3, 0.6) == tuple(james_partials(0.3, 0.6))
