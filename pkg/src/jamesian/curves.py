"""Level curves and gradient fields as data.

Level curves are sampled either from the model itself (b such that
J(a, b) = c) or by integrating db/da = g'(a) / g'(b) with classical RK4
from the point (c, 1/2), which every level-c curve passes through.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, List, Sequence, Tuple

import numpy as np
from scipy.optimize import brentq

from .core import DomainError, JamesianModel, StepError, check_prob, unit
from .generators import Generator

MARGIN = 1e-3
DEFAULT_STEP = 1e-3
_B_GUARD = 1e-12


@dataclass(frozen=True)
class CurveSamples:
    level_c: float
    points: Tuple[Tuple[float, float], ...]
    method: str  # "closed-form" or "ode"

    def __post_init__(self):
        a = [p[0] for p in self.points]
        if any(a1 <= a0 for a0, a1 in zip(a, a[1:])):
            raise ValueError("curve a-coordinates must be strictly increasing")
        if any(not 0.0 < p[1] < 1.0 for p in self.points):
            raise ValueError("curve b-coordinates must lie in (0, 1)")

    @property
    def a(self) -> np.ndarray:
        return np.array([p[0] for p in self.points])

    @property
    def b(self) -> np.ndarray:
        return np.array([p[1] for p in self.points])

    def to_csv(self) -> str:
        rows = ["a,b"] + [f"{a:.17g},{b:.17g}" for a, b in self.points]
        return "\n".join(rows) + "\n"


def _solve_level(model: JamesianModel, a: float, c: float) -> float:
    # J is strictly decreasing in b, J(a, 0) = 1 and J(a, 1) = 0
    return brentq(lambda b: model(a, b) - c, 0.0, 1.0, xtol=1e-15, rtol=4 * np.finfo(float).eps)


def sample_level_curve(model: JamesianModel, c: float, n: int,
                       margin: float = MARGIN) -> CurveSamples:
    """n points of the level-c curve at a evenly spaced on [margin, 1 - margin]."""
    c = check_prob(c, "c")
    if not 0.0 < c < 1.0:
        raise DomainError("level must satisfy 0 < c < 1")
    if n < 2:
        raise ValueError("need at least 2 samples")
    solve = model.level_curve or (lambda a, cc: _solve_level(model, a, cc))
    pts = []
    for a in np.linspace(margin, 1.0 - margin, n):
        a = float(a)
        pts.append((a, float(solve(a, c))))
    return CurveSamples(c, tuple(pts), "closed-form")


def _rk4_leg(rhs: Callable[[float, float], float], a0: float, b0: float,
             a_end: float, step: float) -> List[Tuple[float, float]]:
    """Integrate from (a0, b0) to a_end with fixed steps plus a final partial step."""
    span = a_end - a0
    if span == 0.0:
        return []
    h = math.copysign(step, span)
    full = int(math.floor(abs(span) / step * (1.0 + 1e-12)))
    marks = [a0 + k * h for k in range(1, full + 1)]
    if not marks or abs(a_end - marks[-1]) > 1e-9 * step:
        marks.append(a_end)
    else:
        marks[-1] = a_end

    def f(a, b):
        if not _B_GUARD < b < 1.0 - _B_GUARD:
            raise StepError(f"ODE left the unit interval: b={b!r} at a={a!r}")
        return rhs(a, b)

    out = []
    a, b = a0, b0
    for nxt in marks:
        dh = nxt - a
        k1 = f(a, b)
        k2 = f(a + 0.5 * dh, b + 0.5 * dh * k1)
        k3 = f(a + 0.5 * dh, b + 0.5 * dh * k2)
        k4 = f(nxt, b + dh * k3)
        b = b + dh * (k1 + 2.0 * k2 + 2.0 * k3 + k4) / 6.0
        a = nxt
        if not _B_GUARD < b < 1.0 - _B_GUARD:
            raise StepError(f"ODE left the unit interval: b={b!r} at a={a!r}")
        out.append((a, b))
    return out


def integrate_level_curve_ode(gen: Generator, c: float,
                              a_range: Sequence[float] = (0.01, 0.99),
                              step: float = DEFAULT_STEP) -> CurveSamples:
    """RK4 solution of db/da = g'(a) / g'(b) through (c, 1/2), both directions."""
    if gen.g_prime is None:
        raise DomainError(f"generator {gen.name!r} has no derivative")
    c = check_prob(c, "c")
    lo, hi = float(a_range[0]), float(a_range[1])
    if not (MARGIN <= lo <= c <= hi <= 1.0 - MARGIN) or lo == hi:
        raise DomainError(f"a_range {a_range!r} must lie in [{MARGIN}, {1 - MARGIN}] and contain c={c}")
    if not step > 0.0:
        raise DomainError("step must be positive")
    gp = gen.g_prime

    def rhs(a, b):
        return gp(a) / gp(b)

    left = _rk4_leg(rhs, c, 0.5, lo, step)
    right = _rk4_leg(rhs, c, 0.5, hi, step)
    pts = left[::-1] + [(c, 0.5)] + right
    return CurveSamples(c, tuple(pts), "ode")


def max_deviation(samples: CurveSamples, model: JamesianModel) -> float:
    """Largest |b - b_exact(a)| along the samples, b_exact from the model's level curve."""
    exact = model.level_curve or (lambda a, c: _solve_level(model, a, c))
    return max(abs(b - exact(a, samples.level_c)) for a, b in samples.points)


def sample_gradient_field(model: JamesianModel, mesh: float) -> List[Tuple[float, float, float, float]]:
    """Unit gradient directions (a, b, ga, gb) on the interior mesh points."""
    if not model.has_gradient:
        raise DomainError(f"model {model.name!r} has no analytic gradient")
    cells = int(round(1.0 / mesh))
    if cells < 2:
        raise ValueError("mesh too coarse")
    xs = [i / cells for i in range(1, cells)]
    out = []
    for a in xs:
        for b in xs:
            ga, gb = unit(model.grad(a, b))
            out.append((a, b, ga, gb))
    return out


def field_csv(field: List[Tuple[float, float, float, float]]) -> str:
    rows = ["a,b,ga,gb"] + [",".join(f"{v:.17g}" for v in row) for row in field]
    return "\n".join(rows) + "\n"
