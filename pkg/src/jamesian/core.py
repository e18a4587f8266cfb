"""Shared domain types, boundary semantics and the model abstraction.

Every matchup model in this package is a function of two winning
percentages ``a`` (team A) and ``b`` (team B) on the closed unit square
with the corners (0, 0) and (1, 1) removed.  Edge values are forced by the
James conditions and handled here, once, so model kernels only ever see
interior points.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Callable, NamedTuple, Optional, Tuple

Prob = float  # in [0, 1]
Vector2 = Tuple[float, float]


class JamesianError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(JamesianError, ValueError):
    """An argument lies outside the domain of the operation."""


class UndefinedMatchup(DomainError):
    """Evaluation requested at (0, 0) or (1, 1)."""


class ParamError(JamesianError, ValueError):
    """Invalid model or generator parameter."""


class NumericalError(JamesianError, ArithmeticError):
    """A numerical procedure failed."""


class ConvergenceError(NumericalError):
    pass


class StepError(NumericalError):
    pass


class TieLimitExceeded(NumericalError):
    pass


def check_prob(x: float, name: str = "value") -> float:
    """Return ``x`` as a float, rejecting anything outside [0, 1] (and NaN)."""
    x = float(x)
    if not (0.0 <= x <= 1.0):
        raise DomainError(f"{name}={x!r} is not a probability in [0, 1]")
    return x


def check_interior(a: float, b: float) -> None:
    if not (0.0 < a < 1.0 and 0.0 < b < 1.0):
        raise DomainError(f"({a!r}, {b!r}) is not in the open unit square")


class MatchupPoint(NamedTuple):
    a: Prob
    b: Prob

    @classmethod
    def of(cls, a: float, b: float) -> "MatchupPoint":
        return cls(check_prob(a, "a"), check_prob(b, "b"))

    @property
    def undefined(self) -> bool:
        return (self.a == 0.0 and self.b == 0.0) or (self.a == 1.0 and self.b == 1.0)


class Disposition(enum.Enum):
    INTERIOR = "interior"
    FORCED = "forced"
    UNDEFINED = "undefined"


@dataclass(frozen=True)
class BoundaryDisposition:
    kind: Disposition
    value: Optional[float] = None

    def __post_init__(self):
        if self.kind is Disposition.FORCED:
            if self.value not in (0.0, 1.0):
                raise ValueError("forced values are 0 or 1")
        elif self.value is not None:
            raise ValueError(f"{self.kind.value} disposition carries no value")

    @property
    def forced(self) -> bool:
        return self.kind is Disposition.FORCED


INTERIOR = BoundaryDisposition(Disposition.INTERIOR)
UNDEFINED = BoundaryDisposition(Disposition.UNDEFINED)
FORCED_WIN = BoundaryDisposition(Disposition.FORCED, 1.0)
FORCED_LOSS = BoundaryDisposition(Disposition.FORCED, 0.0)


def classify_boundary(a: float, b: float) -> BoundaryDisposition:
    """Boundary rule shared by every Jamesian function.

    Only exact 0 and 1 count as boundary values; nothing is snapped.
    """
    a = check_prob(a, "a")
    b = check_prob(b, "b")
    if (a == 0.0 and b == 0.0) or (a == 1.0 and b == 1.0):
        return UNDEFINED
    if b == 0.0 or a == 1.0:
        return FORCED_WIN
    if a == 0.0 or b == 1.0:
        return FORCED_LOSS
    return INTERIOR


class Provenance(str, enum.Enum):
    CLOSED_FORM = "closed-form"
    GENERATOR = "generator-based"
    PIECEWISE = "piecewise"


Kernel = Callable[[float, float], float]
GradientFn = Callable[[float, float], Vector2]


@dataclass(frozen=True)
class JamesianModel:
    """A named matchup-probability function.

    ``kernel`` is called only on the open square; ``gradient`` (if any)
    returns the analytic partial derivatives (dJ/da, dJ/db) there.
    ``level_curve(a, c)``, when given, returns the ``b`` with J(a, b) = c.
    """

    name: str
    kernel: Kernel
    provenance: Provenance
    gradient: Optional[GradientFn] = None
    level_curve: Optional[Callable[[float, float], float]] = None

    def __call__(self, a: float, b: float) -> float:
        return evaluate(self, a, b)

    @property
    def has_gradient(self) -> bool:
        return self.gradient is not None

    def grad(self, a: float, b: float) -> Vector2:
        if self.gradient is None:
            raise DomainError(f"model {self.name!r} has no analytic gradient")
        a = check_prob(a, "a")
        b = check_prob(b, "b")
        check_interior(a, b)
        return self.gradient(a, b)


def evaluate(model: JamesianModel, a: float, b: float) -> float:
    disp = classify_boundary(a, b)
    if disp.kind is Disposition.UNDEFINED:
        raise UndefinedMatchup(f"{model.name} is undefined at ({a}, {b})")
    if disp.forced:
        return disp.value
    value = model.kernel(float(a), float(b))
    if math.isnan(value):
        raise NumericalError(f"{model.name} produced NaN at ({a}, {b})")
    # kernels may overshoot by an ulp near the edges
    return min(1.0, max(0.0, value))


def unit(v: Vector2) -> Vector2:
    norm = math.hypot(v[0], v[1])
    if norm == 0.0 or not math.isfinite(norm):
        raise NumericalError(f"cannot normalize {v!r}")
    return (v[0] / norm, v[1] / norm)
