"""The James (log5) function and its calculus.

    P(a, b) = a(1 - b) / (a(1 - b) + b(1 - a))
"""

from __future__ import annotations

from typing import NamedTuple

from .core import (
    DomainError,
    JamesianModel,
    Provenance,
    Vector2,
    check_interior,
    check_prob,
    evaluate,
)


class Partials(NamedTuple):
    dP_da: float
    dP_db: float


class SecondPartials(NamedTuple):
    d2P_da2: float
    d2P_db2: float
    d2P_dadb: float


def _denominator(a: float, b: float) -> float:
    return a * (1.0 - b) + b * (1.0 - a)


def _kernel(a: float, b: float) -> float:
    num = a * (1.0 - b)
    return num / (num + b * (1.0 - a))


def _gradient(a: float, b: float) -> Vector2:
    return tuple(james_partials(a, b))


def james_p(a: float, b: float) -> float:
    """Probability that a team with winning percentage ``a`` beats one with ``b``."""
    return evaluate(JAMES, a, b)


def log5_worth(a: float, c: float = 0.5) -> float:
    """Worth q with a = q / (q + c); c = 1/2 gives James's log5."""
    a = check_prob(a, "a")
    if not 0.0 < a < 1.0:
        raise DomainError("log5 worth needs 0 < a < 1")
    if not c > 0.0:
        raise DomainError("reference worth c must be positive")
    return c * a / (1.0 - a)


def james_partials(a: float, b: float) -> Partials:
    a, b = check_prob(a, "a"), check_prob(b, "b")
    check_interior(a, b)
    d2 = _denominator(a, b) ** 2
    return Partials(b * (1.0 - b) / d2, -a * (1.0 - a) / d2)


def james_second_partials(a: float, b: float) -> SecondPartials:
    a, b = check_prob(a, "a"), check_prob(b, "b")
    check_interior(a, b)
    d3 = _denominator(a, b) ** 3
    return SecondPartials(
        -2.0 * b * (1.0 - b) * (1.0 - 2.0 * b) / d3,
        2.0 * a * (1.0 - a) * (1.0 - 2.0 * a) / d3,
        (a - b) / d3,
    )


def james_gradient_direction(a: float, b: float) -> Vector2:
    """Unnormalized gradient direction <b(1-b), -a(1-a)>.

    Defined everywhere except the four corners of the square.
    """
    a, b = check_prob(a, "a"), check_prob(b, "b")
    if a in (0.0, 1.0) and b in (0.0, 1.0):
        raise DomainError(f"gradient undefined at corner ({a}, {b})")
    return (b * (1.0 - b), -a * (1.0 - a))


def james_involution_partner(a: float, b: float) -> float:
    """c = P(a, b); for fixed 0 < a < 1 this satisfies P(a, c) = b."""
    a = check_prob(a, "a")
    if not 0.0 < a < 1.0:
        raise DomainError("involution needs 0 < a < 1")
    return james_p(a, b)


def james_level_curve(a: float, c: float) -> float:
    """The b on the level curve P(a, b) = c."""
    a, c = check_prob(a, "a"), check_prob(c, "c")
    if not (0.0 < a < 1.0 and 0.0 < c < 1.0):
        raise DomainError("level curve needs 0 < a, c < 1")
    return _kernel(a, c)


def _level_curve(a: float, c: float) -> float:
    return james_level_curve(a, c)


JAMES = JamesianModel(
    name="james",
    kernel=_kernel,
    provenance=Provenance.CLOSED_FORM,
    gradient=_gradient,
    level_curve=_level_curve,
)


def james_model() -> JamesianModel:
    return JAMES

