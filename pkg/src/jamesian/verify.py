"""Auditing models against the condition lists, Monte Carlo validation of
the repeated Bernoulli-pair game, and finite-difference calculus checks.

Condition ids:

    james        a  P(a, 1/2) = a
                 b  P(a, 0) = 1 for 0 < a <= 1
                 c  P(b, a) = 1 - P(a, b)
                 d  P(1 - b, 1 - a) = P(a, b)
                 e  non-decreasing in a; strictly increasing when 0 < b < 1
    proto        1  P(a, a) = 1/2
                 2  P(a, 1/2) = a
                 3  a > b => P > 1/2 and a < b => P < 1/2
                 4  b < 1/2 => P > a and b > 1/2 => P < a   (0 < a < 1)
                 5  0 <= P <= 1; P(a, 0) = 1 and P(a, 1) = 0 for 0 < a < 1
                 6  P(a, b) + P(b, a) = 1
    involutive   i    J(a, J(a, b)) = b for 0 < a < 1
                 ii   J(b, a) = 1 - J(a, b)
                 iii  as james/e
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from .core import (
    DomainError,
    JamesianModel,
    TieLimitExceeded,
    UndefinedMatchup,
    check_prob,
    classify_boundary,
    Disposition,
)
from .james import james_p
from .reports import ConditionReport, fmt
from .rng import StreamBank, derive_seed

MAX_ROUNDS = 10 ** 6


# -- condition audits ---------------------------------------------------------

def _cells(mesh: float) -> int:
    if mesh <= 0:
        raise ValueError("mesh must be positive")
    cells = int(round(1.0 / mesh))
    if cells < 10:
        raise ValueError("mesh must divide (0, 1) into at least 10 cells")
    return cells


class _Grid:
    """Model values on the grid (i/K, j/K), evaluated once."""

    def __init__(self, model: JamesianModel, cells: int):
        self.model = model
        self.k = cells
        self.x = [i / cells for i in range(cells + 1)]
        self.v: List[List[Optional[float]]] = []
        for a in self.x:
            row = []
            for b in self.x:
                legal = not ((a == 0.0 and b == 0.0) or (a == 1.0 and b == 1.0))
                row.append(model(a, b) if legal else None)
            self.v.append(row)

    def legal_pairs(self):
        for i in range(self.k + 1):
            for j in range(self.k + 1):
                if self.v[i][j] is not None:
                    yield i, j


def _check_half(report, model, grid, tol, cid):
    for a in grid.x:
        value = model(a, 0.5)
        report.checks += 1
        if abs(value - a) > tol:
            report.add(cid, a, 0.5, abs(value - a))


def _check_complement(report, grid, tol, cid):
    for i, j in grid.legal_pairs():
        if j < i:
            continue
        report.checks += 1
        resid = abs(grid.v[i][j] + grid.v[j][i] - 1.0)
        if resid > tol:
            report.add(cid, grid.x[i], grid.x[j], resid)


def _check_monotone(report, grid, cid):
    k = grid.k
    for j in range(k + 1):
        strict = 0 < j < k
        for i in range(k):
            lo, hi = grid.v[i][j], grid.v[i + 1][j]
            if lo is None or hi is None:
                continue
            report.checks += 1
            diff = hi - lo
            if diff < 0.0 or (strict and diff <= 0.0):
                report.add(cid, grid.x[i], grid.x[j], -diff)


def check_conditions(model: JamesianModel, condition_list: str = "james",
                     mesh: float = 1 / 50, tol: float = 1e-8) -> ConditionReport:
    """Audit ``model`` on the grid {i * mesh} x {j * mesh}, boundary included."""
    if condition_list not in ("james", "proto", "involutive"):
        raise ValueError(f"unknown condition list {condition_list!r}")
    cells = _cells(mesh)
    report = ConditionReport(model.name, condition_list, 1.0 / cells, tol)
    grid = _Grid(model, cells)
    k = cells

    if condition_list == "james":
        _check_half(report, model, grid, tol, "a")
        for a in grid.x[1:]:
            report.checks += 1
            resid = abs(model(a, 0.0) - 1.0)
            if resid > tol:
                report.add("b", a, 0.0, resid)
        _check_complement(report, grid, tol, "c")
        for i, j in grid.legal_pairs():
            report.checks += 1
            resid = abs(grid.v[k - j][k - i] - grid.v[i][j])
            if resid > tol:
                report.add("d", grid.x[i], grid.x[j], resid)
        _check_monotone(report, grid, "e")

    elif condition_list == "proto":
        for i in range(1, k):
            report.checks += 1
            resid = abs(grid.v[i][i] - 0.5)
            if resid > tol:
                report.add("1", grid.x[i], grid.x[i], resid)
        _check_half(report, model, grid, tol, "2")
        for i, j in grid.legal_pairs():
            a, b, p = grid.x[i], grid.x[j], grid.v[i][j]
            if i != j:
                report.checks += 1
                if i > j and not p > 0.5:
                    report.add("3", a, b, 0.5 - p)
                elif i < j and not p < 0.5:
                    report.add("3", a, b, p - 0.5)
            if 0 < i < k and b != 0.5:
                report.checks += 1
                if b < 0.5 and not p > a:
                    report.add("4", a, b, a - p)
                elif b > 0.5 and not p < a:
                    report.add("4", a, b, p - a)
            report.checks += 1
            if not 0.0 <= p <= 1.0:
                report.add("5", a, b, max(-p, p - 1.0))
        for i in range(1, k):
            report.checks += 2
            if abs(grid.v[i][0] - 1.0) > tol:
                report.add("5", grid.x[i], 0.0, abs(grid.v[i][0] - 1.0))
            if abs(grid.v[i][k]) > tol:
                report.add("5", grid.x[i], 1.0, abs(grid.v[i][k]))
        _check_complement(report, grid, tol, "6")

    else:
        for i in range(1, k):
            a = grid.x[i]
            for j in range(k + 1):
                report.checks += 1
                resid = abs(model(a, grid.v[i][j]) - grid.x[j])
                if resid > tol:
                    report.add("i", a, grid.x[j], resid)
        _check_complement(report, grid, tol, "ii")
        _check_monotone(report, grid, "iii")
    return report


# -- Monte Carlo --------------------------------------------------------------

@dataclass(frozen=True)
class McEstimate:
    a: float
    b: float
    trials: int
    wins: int
    estimate: float
    std_error: float
    seed: int
    ties_resampled_total: int
    rounds_total: int

    @property
    def tie_frequency(self) -> float:
        return self.ties_resampled_total / self.rounds_total

    def to_dict(self) -> Dict:
        return {
            "a": self.a, "b": self.b, "trials": self.trials, "wins": self.wins,
            "estimate": self.estimate, "std_error": self.std_error, "seed": self.seed,
            "ties_resampled_total": self.ties_resampled_total, "rounds_total": self.rounds_total,
        }


def mc_estimate(a: float, b: float, trials: int, seed: int = 0,
                max_rounds: int = MAX_ROUNDS) -> McEstimate:
    """Simulate the game: each round A draws 1 w.p. a and B draws 1 w.p. b;
    (1, 0) is a win for A, (0, 1) a loss, and equal draws are replayed.
    """
    a, b = check_prob(a, "a"), check_prob(b, "b")
    if classify_boundary(a, b).kind is Disposition.UNDEFINED:
        raise UndefinedMatchup(f"no game is possible at ({a}, {b})")
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if max_rounds < 1:
        raise ValueError("max_rounds must be >= 1")
    seed = int(seed)
    bank = StreamBank(seed, trials)
    pending = trials
    wins = ties = rounds = 0
    for _ in range(max_rounds):
        x = bank.random() < a
        y = bank.random() < b
        rounds += pending
        wins += int(np.count_nonzero(x & ~y))
        tied = x == y
        pending = int(np.count_nonzero(tied))
        ties += pending
        if pending == 0:
            break
        bank.keep(tied)
    else:
        raise TieLimitExceeded(
            f"{pending} trial(s) still tied after {max_rounds} rounds at ({a}, {b})")
    est = wins / trials
    return McEstimate(a, b, trials, wins, est, math.sqrt(est * (1.0 - est) / trials),
                      seed, ties, rounds)


@dataclass(frozen=True)
class McComparison:
    estimate: McEstimate
    model_value: float
    z: float
    flagged: bool


@dataclass
class McValidation:
    model_name: str
    trials: int
    seed: int
    z_threshold: float
    rows: List[McComparison] = field(default_factory=list)

    @property
    def flagged(self) -> List[McComparison]:
        return [r for r in self.rows if r.flagged]

    @property
    def passed(self) -> bool:
        return not self.flagged


def z_score(estimate: McEstimate, value: float) -> float:
    diff = estimate.estimate - value
    if estimate.std_error > 0.0:
        return diff / estimate.std_error
    if diff == 0.0:
        return 0.0
    return math.copysign(math.inf, diff)


def mc_validate(model: JamesianModel, points: Sequence[Tuple[float, float]],
                trials: int, seed: int = 0, z: float = 4.0) -> McValidation:
    """Compare the simulated win rate with ``model`` at each interior point.

    Point k uses a child seed derived from (seed, k).
    """
    out = McValidation(model.name, trials, int(seed), z)
    for k, (a, b) in enumerate(points):
        if not (0.0 < a < 1.0 and 0.0 < b < 1.0):
            raise DomainError(f"validation points must be interior, got ({a}, {b})")
        est = mc_estimate(a, b, trials, derive_seed(seed, k))
        value = model(a, b)
        score = z_score(est, value)
        out.rows.append(McComparison(est, value, score, abs(score) > z))
    return out


# -- identities and calculus --------------------------------------------------

@dataclass(frozen=True)
class IdentityResult:
    name: str
    max_residual: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return self.max_residual <= self.tolerance


def algebraic_identity_checks(cells: int = 40) -> List[IdentityResult]:
    """Outcome probabilities sum to 1, the replay functional equation and
    the geometric-series form all agree with ``james_p`` on a grid."""
    xs = [i / cells for i in range(cells + 1)]
    total = functional = series = 0.0
    for a in xs:
        for b in xs:
            tie = a * b + (1.0 - a) * (1.0 - b)
            total = max(total, abs(tie + a * (1.0 - b) + b * (1.0 - a) - 1.0))
            if (a == b == 0.0) or (a == b == 1.0):
                continue
            p = james_p(a, b)
            functional = max(functional, abs(p - (a * (1.0 - b) + tie * p)))
            series = max(series, abs(a * (1.0 - b) / (1.0 - tie) - p))
    return [
        IdentityResult("outcome-probabilities-sum-to-one", total, 1e-15),
        IdentityResult("functional-equation", functional, 1e-12),
        IdentityResult("geometric-series", series, 1e-12),
    ]


@dataclass(frozen=True)
class GradientRow:
    a: float
    b: float
    analytic: Tuple[float, float]
    numeric: Tuple[float, float]

    @property
    def deviation(self) -> float:
        return max(abs(self.analytic[0] - self.numeric[0]), abs(self.analytic[1] - self.numeric[1]))


@dataclass
class GradientCheck:
    model_name: str
    h: float
    tolerance: float
    rows: List[GradientRow] = field(default_factory=list)

    @property
    def max_deviation(self) -> float:
        return max((r.deviation for r in self.rows), default=0.0)

    @property
    def flagged(self) -> List[GradientRow]:
        return [r for r in self.rows if r.deviation > self.tolerance]

    @property
    def passed(self) -> bool:
        return not self.flagged


def central_gradient(model: JamesianModel, a: float, b: float, h: float) -> Tuple[float, float]:
    return ((model(a + h, b) - model(a - h, b)) / (2.0 * h),
            (model(a, b + h) - model(a, b - h)) / (2.0 * h))


def fd_gradient_check(model: JamesianModel, points: Sequence[Tuple[float, float]],
                      h: float = 1e-6, tol: float = 1e-5) -> GradientCheck:
    if not model.has_gradient:
        raise DomainError(f"model {model.name!r} has no analytic gradient")
    out = GradientCheck(model.name, h, tol)
    for a, b in points:
        if min(a, b, 1.0 - a, 1.0 - b) <= h:
            raise DomainError(f"({a}, {b}) is within h={h} of the boundary")
        out.rows.append(GradientRow(a, b, tuple(model.grad(a, b)), central_gradient(model, a, b, h)))
    return out


def interior_grid(count: int) -> List[Tuple[float, float]]:
    """count x count points (i / (count + 1), j / (count + 1))."""
    xs = [i / (count + 1) for i in range(1, count + 1)]
    return [(a, b) for a in xs for b in xs]


def mc_text(est: McEstimate, model_name: str, value: float) -> str:
    """Key=value report used by the CLI; stable byte-for-byte for a fixed seed."""
    lines = [f"{key}={fmt(v) if isinstance(v, float) else v}" for key, v in est.to_dict().items()]
    lines += [f"model={model_name}", f"model_value={fmt(value)}", f"z={fmt(z_score(est, value))}"]
    return "\n".join(lines)
