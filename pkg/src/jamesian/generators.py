"""Involutive Jamesian functions built from a generator g:

    J(a, b) = g^-1(g(a) - g(b))

``g`` must be continuous and strictly increasing on (0, 1), odd about 1/2
(g(1 - a) = -g(a)) and diverge to -inf at 0.  Built-ins: logit (which
reproduces the James function), rational, cot, probit and the power family

    g_n(a) = integral from 1/2 to a of (t(1 - t))^-n dt,   n >= 1,

whose models are the hyper-James functions H_n.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from functools import lru_cache
from statistics import NormalDist
from typing import Callable, Optional

import numpy as np

from .core import (
    ConvergenceError,
    DomainError,
    JamesianModel,
    ParamError,
    Provenance,
    Vector2,
    check_interior,
    check_prob,
    evaluate,
)
from .reports import ConditionReport

QUAD_TOL = 1e-10
QUAD_MAX_DEPTH = 60
INVERT_TOL = 1e-12
CLAMP = 1e-15

_EPS = np.finfo(float).eps
_STD_NORMAL = NormalDist()


# -- quadrature ---------------------------------------------------------------

def adaptive_simpson(f: Callable[[float], float], lo: float, hi: float,
                     tol: float = QUAD_TOL, max_depth: int = QUAD_MAX_DEPTH) -> float:
    """Integrate f over [lo, hi] by adaptive Simpson with Richardson correction.

    ``tol`` is an absolute error target.  Subdivision also stops once the
    local error estimate is at the rounding level of the local value, so a
    target that double precision cannot reach does not recurse forever.
    """
    if lo == hi:
        return 0.0
    if hi < lo:
        return -adaptive_simpson(f, hi, lo, tol, max_depth)
    flo, fhi = f(lo), f(hi)
    mid = 0.5 * (lo + hi)
    fmid = f(mid)
    whole = (hi - lo) / 6.0 * (flo + 4.0 * fmid + fhi)
    return _simpson_step(f, lo, mid, hi, flo, fmid, fhi, whole, tol, max_depth)


def _simpson_step(f, lo, mid, hi, flo, fmid, fhi, whole, tol, depth):
    lm = 0.5 * (lo + mid)
    rm = 0.5 * (mid + hi)
    flm, frm = f(lm), f(rm)
    left = (mid - lo) / 6.0 * (flo + 4.0 * flm + fmid)
    right = (hi - mid) / 6.0 * (fmid + 4.0 * frm + fhi)
    both = left + right
    delta = both - whole
    if (depth <= 0 or abs(delta) <= 15.0 * tol
            or abs(delta) <= 64.0 * _EPS * abs(both) or lm == lo or rm == hi):
        return both + delta / 15.0
    return (_simpson_step(f, lo, lm, mid, flo, flm, fmid, left, 0.5 * tol, depth - 1)
            + _simpson_step(f, mid, rm, hi, fmid, frm, fhi, right, 0.5 * tol, depth - 1))


def _check_power(n: float) -> float:
    n = float(n)
    if not n >= 1.0 or not math.isfinite(n):
        raise ParamError(f"power-family exponent must satisfy n >= 1, got {n!r}")
    return n


def _power_integrand(n: float) -> Callable[[float], float]:
    if n == 1.0:
        return lambda t: 1.0 / (t * (1.0 - t))
    if n == 2.0:
        return lambda t: 1.0 / (t * (1.0 - t)) ** 2
    return lambda t: (t * (1.0 - t)) ** -n


def eval_g_power(n: float, a: float, tol: float = QUAD_TOL) -> float:
    """g_n(a) by adaptive quadrature from 1/2 (negative for a < 1/2)."""
    n = _check_power(n)
    a = check_prob(a, "a")
    if not 0.0 < a < 1.0:
        raise DomainError("g_n diverges at 0 and 1")
    if a == 0.5:
        return 0.0
    return adaptive_simpson(_power_integrand(n), 0.5, a, tol)


def g32_closed_form(a: float) -> float:
    return 2.0 * (2.0 * a - 1.0) / math.sqrt(a * (1.0 - a))


def g32_inverse_closed_form(s: float) -> float:
    r = math.sqrt(s * s + 16.0)
    if s >= 0.0:
        return (s + r) / (2.0 * r)
    return 8.0 / ((r - s) * r)


# -- generators ---------------------------------------------------------------

@dataclass(frozen=True)
class Generator:
    name: str
    g: Callable[[float], float]
    g_inverse: Optional[Callable[[float], float]] = None
    g_prime: Optional[Callable[[float], float]] = None
    evaluation_mode: str = "closed-form"  # or "quadrature"
    # g(x1) - g(x0); lets inversion integrate only between nearby points
    g_increment: Optional[Callable[[float, float], float]] = None

    def inverse(self, s: float, tol: float = INVERT_TOL) -> float:
        return invert_monotone(self, s, tol)


def invert_monotone(gen: Generator, s: float, tol: float = INVERT_TOL) -> float:
    """Solve g(a) = s for a in (0, 1).

    Uses the closed-form inverse when the generator has one.  Otherwise the
    bracket [1/4, 3/4] is widened by halving the distance to each endpoint
    (never beyond CLAMP), then narrowed by bisection with Newton steps taken
    whenever g' is known and the step stays inside the bracket.  Returns a
    with |g(a) - s| <= tol * max(1, |s|), or the best point once the bracket
    has shrunk to a few ulps.
    """
    if not tol > 0.0:
        raise ValueError("tol must be positive")
    s = float(s)
    if not math.isfinite(s):
        raise DomainError(f"cannot invert non-finite value {s!r}")
    if gen.g_inverse is not None:
        return gen.g_inverse(s)

    g = gen.g
    lo, hi = 0.25, 0.75
    glo, ghi = g(lo), g(hi)
    while glo > s:
        if lo <= CLAMP:
            raise ConvergenceError(f"{gen.name}: cannot bracket s={s!r} from below")
        hi, ghi = lo, glo
        lo = max(0.5 * lo, CLAMP)
        glo = g(lo)
    while ghi < s:
        if hi >= 1.0 - CLAMP:
            raise ConvergenceError(f"{gen.name}: cannot bracket s={s!r} from above")
        lo, glo = hi, ghi
        hi = min(1.0 - 0.5 * (1.0 - hi), 1.0 - CLAMP)
        ghi = g(hi)

    target = tol * max(1.0, abs(s))
    if abs(glo - s) <= target:
        return lo
    if abs(ghi - s) <= target:
        return hi

    step = gen.g_increment

    def g_at(x):
        if step is None:
            return g(x)
        if x - lo <= hi - x:
            return glo + step(lo, x)
        return ghi - step(x, hi)

    x = 0.5 * (lo + hi)
    best, best_res = x, math.inf
    for _ in range(400):
        gx = g_at(x)
        res = gx - s
        if abs(res) < best_res:
            best, best_res = x, abs(res)
        if abs(res) <= target:
            return x
        if res < 0.0:
            lo, glo = x, gx
        else:
            hi, ghi = x, gx
        if hi - lo <= 4.0 * _EPS * max(x, 1e-300):
            return best
        step_x = None
        if gen.g_prime is not None:
            slope = gen.g_prime(x)
            if slope > 0.0 and math.isfinite(slope):
                cand = x - res / slope
                if lo < cand < hi:
                    step_x = cand
        x = step_x if step_x is not None else 0.5 * (lo + hi)
    return best


def _logit(a: float) -> float:
    return math.log(a) - math.log1p(-a)


def _logistic(s: float) -> float:
    if s >= 0.0:
        return 1.0 / (1.0 + math.exp(-s))
    e = math.exp(s)
    return e / (1.0 + e)


def _rational(a: float) -> float:
    return (2.0 * a - 1.0) / (a * (1.0 - a))


def _rational_inverse(s: float) -> float:
    # root of s a^2 + (2 - s) a - 1 = 0 in (0, 1), arranged to avoid cancellation
    r = math.sqrt(s * s + 4.0)
    if s >= 0.0:
        return (r + s) / (r + s + 2.0)
    return 2.0 / (r + 2.0 - s)


def _rational_prime(a: float) -> float:
    u = a * (1.0 - a)
    return (2.0 * a * a - 2.0 * a + 1.0) / (u * u)


def _cot(a: float) -> float:
    return -1.0 / math.tan(math.pi * a)


def _cot_inverse(s: float) -> float:
    # arccot with values in (0, pi): arccot(x) = atan2(1, x)
    return math.atan2(1.0, -s) / math.pi


def _cot_prime(a: float) -> float:
    return math.pi / math.sin(math.pi * a) ** 2


def _probit_prime(a: float) -> float:
    z = _STD_NORMAL.inv_cdf(a)
    return math.sqrt(2.0 * math.pi) * math.exp(0.5 * z * z)


def power_generator(n: float) -> Generator:
    n = _check_power(n)
    integrand = _power_integrand(n)

    @lru_cache(maxsize=1 << 16)
    def g(a: float) -> float:
        return eval_g_power(n, a)

    def increment(x0: float, x1: float) -> float:
        return adaptive_simpson(integrand, x0, x1, QUAD_TOL)

    return Generator(
        name=f"power:{n:g}",
        g=g,
        g_prime=integrand,
        evaluation_mode="quadrature",
        g_increment=increment,
    )


BUILTIN_NAMES = ("logit", "rational", "cot", "probit", "power")


def builtin_generator(name: str, n: Optional[float] = None) -> Generator:
    """Look up a built-in generator by name; ``"power:2"`` and ``("power", 2)`` both work."""
    if name.startswith("power"):
        if ":" in name:
            head, _, arg = name.partition(":")
            if head != "power" or n is not None:
                raise ParamError(f"bad generator id {name!r}")
            try:
                n = float(arg)
            except ValueError:
                raise ParamError(f"bad power exponent in {name!r}") from None
        elif name != "power" or n is None:
            raise ParamError("power generator needs an exponent n >= 1")
        return power_generator(n)
    if n is not None:
        raise ParamError(f"generator {name!r} takes no parameter")
    if name == "logit":
        return Generator("logit", _logit, _logistic, lambda a: 1.0 / (a * (1.0 - a)))
    if name == "rational":
        return Generator("rational", _rational, _rational_inverse, _rational_prime)
    if name == "cot":
        return Generator("cot", _cot, _cot_inverse, _cot_prime)
    if name == "probit":
        return Generator("probit", _STD_NORMAL.inv_cdf, _STD_NORMAL.cdf, _probit_prime)
    raise ParamError(f"unknown generator {name!r}; expected one of {', '.join(BUILTIN_NAMES)}")


# -- models -------------------------------------------------------------------

def generator_gradient(gen: Generator, a: float, b: float) -> Vector2:
    """(dJ/da, dJ/db) = (g'(a), -g'(b)) / g'(J(a, b))."""
    if gen.g_prime is None:
        raise DomainError(f"generator {gen.name!r} has no derivative")
    a, b = check_prob(a, "a"), check_prob(b, "b")
    check_interior(a, b)
    j = gen.inverse(gen.g(a) - gen.g(b))
    gj = gen.g_prime(j)
    return (gen.g_prime(a) / gj, -gen.g_prime(b) / gj)


def jamesian_from_generator(gen: Generator) -> JamesianModel:
    def kernel(a: float, b: float) -> float:
        return gen.inverse(gen.g(a) - gen.g(b))

    gradient = None
    if gen.g_prime is not None:
        def gradient(a: float, b: float) -> Vector2:
            return generator_gradient(gen, a, b)

    return JamesianModel(
        name=gen.name,
        kernel=kernel,
        provenance=Provenance.GENERATOR,
        gradient=gradient,
        # involution: the level curve J(a, b) = c is b = J(a, c)
        level_curve=kernel,
    )


def h32_closed_form(a: float, b: float) -> float:
    """Explicit form of the hyper-James function H_{3/2}."""
    a, b = check_prob(a, "a"), check_prob(b, "b")
    check_interior(a, b)
    u, v = a * (1.0 - a), b * (1.0 - b)
    du, dv = 1.0 - 2.0 * a, 1.0 - 2.0 * b
    radicand = u + v - 4.0 * u * v - 2.0 * du * dv * math.sqrt(u * v)
    return 0.5 + (dv * math.sqrt(u) - du * math.sqrt(v)) / (2.0 * math.sqrt(radicand))


# -- self-check ---------------------------------------------------------------

def generator_selfcheck(gen: Generator, gridsize: int = 99, tol: float = 1e-9) -> ConditionReport:
    """Audit a generator on the grid k / (gridsize + 1), k = 1..gridsize.

    Conditions: ``monotone``, ``odd-symmetry``, ``center`` (g(1/2) = 0),
    ``divergence``, ``round-trip`` and, with g', ``derivative``.

    Divergence at 0 cannot be observed directly; it is checked as continued
    decrease with a drop of at least 1 between g(1e-4) and g(1e-8).  (Logit
    is only -18.4 at 1e-8 and probit -5.6, so a fixed threshold won't do.)
    Derivatives are compared with centered differences at relative tolerance
    max(tol, 1e-5) since the difference quotient of a quadrature-evaluated g
    cannot do better.
    """
    if gridsize < 3:
        raise ValueError("gridsize must be at least 3")
    mesh = 1.0 / (gridsize + 1)
    report = ConditionReport(gen.name, "generator-selfcheck", mesh, tol)
    grid = [k * mesh for k in range(1, gridsize + 1)]
    values = [gen.g(a) for a in grid]

    for a0, a1, g0, g1 in zip(grid, grid[1:], values, values[1:]):
        report.checks += 1
        if not g1 > g0:
            report.add("monotone", a0, a1, g0 - g1)

    for k, a in enumerate(grid):
        mirror = values[gridsize - 1 - k]  # g at 1 - a, on the same grid
        report.checks += 1
        resid = abs(values[k] + mirror)
        if resid > tol * max(1.0, abs(values[k])):
            report.add("odd-symmetry", a, None, resid)

    report.checks += 1
    center = abs(gen.g(0.5))
    if center > min(tol, 1e-12):
        report.add("center", 0.5, None, center)

    probes = [gen.g(x) for x in (1e-2, 1e-4, 1e-8)]
    report.checks += 1
    if not (probes[1] < probes[0] and probes[2] < probes[1] - 1.0):
        report.add("divergence", 1e-8, None, probes[2])

    for a, ga in zip(grid, values):
        report.checks += 1
        try:
            back = gen.inverse(ga)
        except ConvergenceError:
            report.add("round-trip", a, None, math.inf)
            continue
        if abs(back - a) > tol:
            report.add("round-trip", a, None, abs(back - a))

    if gen.g_prime is not None:
        rtol = max(tol, 1e-5)
        for a in grid:
            h = 1e-4 * min(a, 1.0 - a)
            fd = (gen.g(a + h) - gen.g(a - h)) / (2.0 * h)
            exact = gen.g_prime(a)
            report.checks += 1
            if abs(fd - exact) > rtol * max(1.0, abs(exact)):
                report.add("derivative", a, None, abs(fd - exact))
    return report


# -- tabulated generators (bulk curve sampling only) --------------------------

def tabulate(gen: Generator, nodes: int = 4097, margin: float = 1e-3) -> Generator:
    """Spline approximation of ``gen`` on Chebyshev-spaced nodes in [margin, 1 - margin].

    For plotting many level curves of quadrature generators.  Values outside
    the table fall back to the exact generator.
    """
    from scipy.interpolate import CubicSpline

    if nodes < 5 or nodes % 2 == 0:
        raise ValueError("nodes must be odd and >= 5")
    k = np.arange(nodes)
    x = 0.5 - (0.5 - margin) * np.cos(np.pi * k / (nodes - 1))
    mid = nodes // 2
    x[mid] = 0.5
    if gen.g_prime is not None:
        # accumulate outward from 1/2 so each node costs one short integral
        gx = np.empty(nodes)
        gx[mid] = 0.0
        for i in range(mid + 1, nodes):
            gx[i] = gx[i - 1] + adaptive_simpson(gen.g_prime, x[i - 1], x[i])
        for i in range(mid - 1, -1, -1):
            gx[i] = gx[i + 1] - adaptive_simpson(gen.g_prime, x[i], x[i + 1])
    else:
        gx = np.array([gen.g(float(t)) for t in x])
    forward = CubicSpline(x, gx)
    backward = CubicSpline(gx, x)
    deriv = forward.derivative()
    lo_x, hi_x = float(x[0]), float(x[-1])
    lo_g, hi_g = float(gx[0]), float(gx[-1])

    def g(a: float) -> float:
        if lo_x <= a <= hi_x:
            return float(forward(a))
        return gen.g(a)

    def g_inverse(s: float) -> float:
        if lo_g <= s <= hi_g:
            return float(backward(s))
        return gen.inverse(s)

    def g_prime(a: float) -> float:
        if gen.g_prime is not None:
            return gen.g_prime(a)
        return float(deriv(a))

    return replace(gen, name=f"{gen.name}~tab", g=g, g_inverse=g_inverse,
                   g_prime=g_prime, evaluation_mode="closed-form", g_increment=None)


def generator_model(name: str, n: Optional[float] = None) -> JamesianModel:
    return jamesian_from_generator(builtin_generator(name, n))


__all__ = [
    "Generator", "adaptive_simpson", "builtin_generator", "eval_g_power",
    "evaluate", "generator_gradient", "generator_model", "generator_selfcheck",
    "g32_closed_form", "g32_inverse_closed_form", "h32_closed_form",
    "invert_monotone", "jamesian_from_generator", "power_generator", "tabulate",
]
