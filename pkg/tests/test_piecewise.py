from fractions import Fraction

import pytest

from jamesian.core import DomainError, UndefinedMatchup
from jamesian.piecewise import PIECEWISE, Region, piecewise_j, piecewise_level_curve, region_classify

from conftest import NINTHS

FORMULAS = {
    Region.I: lambda a, b: a / (2 * b),
    Region.II: lambda a, b: (2 * a - b) / (2 * a),
    Region.III: lambda a, b: (1 - b) / (2 * (1 - a)),
    Region.IV: lambda a, b: (1 + a - 2 * b) / (2 * (1 - b)),
}
SAMPLES = [k / 100 for k in range(1, 100)]


def test_region_examples():
    assert region_classify(1 / 3, 1 / 4) is Region.II
    assert region_classify(1 / 3, 5 / 8) is Region.I
    assert region_classify(0.5, 0.5) is Region.I
    assert region_classify(0.2, 0.9) is Region.III
    assert region_classify(0.9, 0.3) is Region.IV
    with pytest.raises(DomainError):
        region_classify(0.0, 0.5)


def test_exact_values_select_the_right_region():
    a = Fraction(1, 3)
    hits = [r for r, f in FORMULAS.items() if f(a, Fraction(1, 4)) == Fraction(5, 8)]
    assert hits == [Region.II]
    hits = [r for r, f in FORMULAS.items() if f(a, Fraction(5, 8)) == Fraction(4, 15)]
    assert hits == [Region.I]


def test_exact_values():
    assert abs(piecewise_j(1 / 3, 1 / 4) - 5 / 8) < 1e-12
    assert abs(piecewise_j(1 / 3, 5 / 8) - 4 / 15) < 1e-12


@pytest.mark.parametrize("a", NINTHS)
def test_diagonal(a):
    assert piecewise_j(a, a) == pytest.approx(0.5, abs=1e-15)


def test_corners():
    with pytest.raises(UndefinedMatchup):
        piecewise_j(1, 1)
    assert piecewise_j(0.3, 0) == 1.0


def test_center_all_formulas_agree():
    for f in FORMULAS.values():
        assert f(0.5, 0.5) == 0.5


def test_boundary_agreement():
    for a in SAMPLES:
        # along b = a: I/II below the anti-diagonal, III/IV above
        lo, hi = (Region.I, Region.II) if 2 * a <= 1 else (Region.III, Region.IV)
        assert FORMULAS[lo](a, a) == pytest.approx(FORMULAS[hi](a, a), abs=1e-12)
        # along b = 1 - a: I/III above the diagonal, II/IV below
        b = 1 - a
        lo, hi = (Region.I, Region.III) if b >= a else (Region.II, Region.IV)
        assert FORMULAS[lo](a, b) == pytest.approx(FORMULAS[hi](a, b), abs=1e-12)


def test_not_involutive():
    # J(1/3, J(1/3, 1/4)) = J(1/3, 5/8) = 4/15, off from 1/4 by exactly 1/60
    a = Fraction(1, 3)
    assert FORMULAS[Region.I](a, FORMULAS[Region.II](a, Fraction(1, 4))) - Fraction(1, 4) == Fraction(1, 60)
    resid = abs(piecewise_j(1 / 3, piecewise_j(1 / 3, 1 / 4)) - 1 / 4)
    assert resid == pytest.approx(1 / 60, abs=1e-12)


@pytest.mark.parametrize("a0", [0.25, 0.75])
def test_kink_across_antidiagonal(a0):
    h = 1e-6
    b0 = 1 - a0
    below = (piecewise_j(a0, b0) - piecewise_j(a0, b0 - h)) / h
    above = (piecewise_j(a0, b0 + h) - piecewise_j(a0, b0)) / h
    assert abs(above - below) > 0.05


def test_center_probe_smooth():
    # loose probe only: one-sided quotients at the centre roughly agree
    h = 1e-6
    c = piecewise_j(0.5, 0.5)
    for da, db in [(h, 0), (0, h)]:
        fwd = (piecewise_j(0.5 + da, 0.5 + db) - c) / h
        bwd = (c - piecewise_j(0.5 - da, 0.5 - db)) / h
        assert abs(fwd - bwd) < 1e-3


@pytest.mark.parametrize("c", NINTHS)
def test_level_curve_passes_through_c_half(c):
    assert piecewise_level_curve(c, c) == pytest.approx(0.5, abs=1e-15)


@pytest.mark.parametrize("c", NINTHS)
def test_level_curve_round_trip(c):
    for a in SAMPLES:
        b = piecewise_level_curve(c, a)
        assert piecewise_j(a, b) == pytest.approx(c, abs=1e-12)


def test_level_curve_examples():
    for a in NINTHS:
        assert piecewise_level_curve(0.5, a) == pytest.approx(a, abs=1e-15)
    assert piecewise_level_curve(0.25, 0.2) == pytest.approx(0.4, abs=1e-15)
    assert piecewise_j(0.2, 0.4) == pytest.approx(0.25, abs=1e-15)
    with pytest.raises(DomainError):
        piecewise_level_curve(0.0, 0.5)


def test_model_has_no_gradient():
    assert not PIECEWISE.has_gradient
    with pytest.raises(DomainError):
        PIECEWISE.grad(0.3, 0.4)
