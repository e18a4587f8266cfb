"""A Jamesian function that is not involutive.

Built from the level-curve family j_c; on the open square it splits along
the diagonals b = a and a + b = 1 into four regions:

    I    b >= a, a + b <= 1     J = a / (2b)
    II   b <= a, a + b <= 1     J = (2a - b) / (2a)
    III  b >= a, a + b >= 1     J = (1 - b) / (2(1 - a))
    IV   b <= a, a + b >= 1     J = (1 + a - 2b) / (2(1 - b))

Adjacent formulas agree on the shared diagonals, so ties go to the
lower-numbered region.  The function is continuous but not differentiable
across a + b = 1 (except at the centre).
"""

from __future__ import annotations

import enum

from .core import (
    DomainError,
    JamesianModel,
    Provenance,
    check_interior,
    check_prob,
    evaluate,
)


class Region(enum.IntEnum):
    I = 1
    II = 2
    III = 3
    IV = 4


def region_classify(a: float, b: float) -> Region:
    a, b = check_prob(a, "a"), check_prob(b, "b")
    check_interior(a, b)
    upper = b >= a
    s = a + b
    if upper:
        return Region.I if s <= 1.0 else Region.III
    return Region.II if s <= 1.0 else Region.IV


def _kernel(a: float, b: float) -> float:
    region = region_classify(a, b)
    if region is Region.I:
        return a / (2.0 * b)
    if region is Region.II:
        return (2.0 * a - b) / (2.0 * a)
    if region is Region.III:
        return (1.0 - b) / (2.0 * (1.0 - a))
    return (1.0 + a - 2.0 * b) / (2.0 * (1.0 - b))


def piecewise_j(a: float, b: float) -> float:
    return evaluate(PIECEWISE, a, b)


def piecewise_level_curve(c: float, a: float) -> float:
    """j_c(a): the b on the level curve J(a, b) = c."""
    c, a = check_prob(c, "c"), check_prob(a, "a")
    if not (0.0 < c < 1.0 and 0.0 < a < 1.0):
        raise DomainError("level curve needs 0 < a, c < 1")
    if c <= 0.5:
        if a <= 2.0 * c / (1.0 + 2.0 * c):
            return a / (2.0 * c)
        return 2.0 * c * a + 1.0 - 2.0 * c
    if a <= 1.0 / (3.0 - 2.0 * c):
        return (2.0 - 2.0 * c) * a
    return (a + 1.0 - 2.0 * c) / (2.0 - 2.0 * c)


PIECEWISE = JamesianModel(
    name="piecewise",
    kernel=_kernel,
    provenance=Provenance.PIECEWISE,
    level_curve=lambda a, c: piecewise_level_curve(c, a),
)


def piecewise_model() -> JamesianModel:
    return PIECEWISE
