"""Report containers shared by the audit routines.

The ``to_dict`` forms are flat key/value mappings with arrays for the
violation lists; the CLI serializes them verbatim as JSON.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional

CONDITION_LISTS = ("james", "proto", "involutive", "generator-selfcheck")


def fmt(x: float) -> str:
    """Shortest repr that round-trips; used for every number we print."""
    return repr(float(x))


@dataclass(frozen=True)
class Violation:
    condition: str
    a: float
    b: Optional[float]
    magnitude: float

    def to_dict(self) -> Dict:
        return {"condition": self.condition, "a": self.a, "b": self.b, "magnitude": self.magnitude}


@dataclass
class ConditionReport:
    model_name: str
    condition_list: str
    grid_mesh: float
    tolerance: float
    violations: List[Violation] = field(default_factory=list)
    checks: int = 0

    def __post_init__(self):
        if self.condition_list not in CONDITION_LISTS:
            raise ValueError(f"unknown condition list {self.condition_list!r}")

    @property
    def passed(self) -> bool:
        return not self.violations

    def add(self, condition: str, a: float, b: Optional[float], magnitude: float) -> None:
        self.violations.append(Violation(condition, float(a), None if b is None else float(b), float(magnitude)))

    def failed_conditions(self) -> List[str]:
        seen: List[str] = []
        for v in self.violations:
            if v.condition not in seen:
                seen.append(v.condition)
        return seen

    def worst(self, condition: Optional[str] = None) -> Optional[Violation]:
        pool = [v for v in self.violations if condition is None or v.condition == condition]
        return max(pool, key=lambda v: v.magnitude, default=None)

    def to_dict(self) -> Dict:
        return {
            "model": self.model_name,
            "condition_list": self.condition_list,
            "grid_mesh": self.grid_mesh,
            "tolerance": self.tolerance,
            "checks": self.checks,
            "passed": self.passed,
            "violation_count": len(self.violations),
            "violations": [v.to_dict() for v in self.violations],
        }

    def to_text(self, limit: int = 20) -> str:
        lines = [
            f"model={self.model_name}",
            f"condition_list={self.condition_list}",
            f"grid_mesh={fmt(self.grid_mesh)}",
            f"tolerance={fmt(self.tolerance)}",
            f"checks={self.checks}",
            f"result={'PASS' if self.passed else 'FAIL'}",
            f"violations={len(self.violations)}",
        ]
        for cond in self.failed_conditions():
            w = self.worst(cond)
            count = sum(1 for v in self.violations if v.condition == cond)
            loc = fmt(w.a) if w.b is None else f"({fmt(w.a)}, {fmt(w.b)})"
            lines.append(f"  condition {cond}: {count} violation(s), worst {fmt(w.magnitude)} at {loc}")
        for v in self.violations[:limit]:
            loc = fmt(v.a) if v.b is None else f"{fmt(v.a)},{fmt(v.b)}"
            lines.append(f"violation,{v.condition},{loc},{fmt(v.magnitude)}")
        if len(self.violations) > limit:
            lines.append(f"... {len(self.violations) - limit} more")
        return "\n".join(lines)
