"""Structured records of verified inequality instances."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field


def _jsonable(x):
    if isinstance(x, float) and not math.isfinite(x):
        return repr(x)  # 'inf', '-inf', 'nan'
    return x


@dataclass(frozen=True)
class BoundReport:
    """One checked inequality instance: lhs <= rhs up to a tolerance.

    slack = rhs - lhs, and the verdict holds iff slack >= -tolerance.  For
    equality checks slack is -(|lhs - rhs|), so the same verdict rule applies.
    """

    name: str
    lhs: float
    rhs: float
    slack: float
    tolerance: float
    context: dict = field(default_factory=dict)

    @property
    def holds(self) -> bool:
        return self.slack >= -self.tolerance

    @property
    def verdict(self) -> str:
        return "holds" if self.holds else "violated"

    def to_obj(self) -> dict:
        return {
            "name": self.name,
            "lhs": _jsonable(self.lhs),
            "rhs": _jsonable(self.rhs),
            "slack": _jsonable(self.slack),
            "tolerance": self.tolerance,
            "verdict": self.verdict,
            "context": {k: _jsonable(v) for k, v in self.context.items()},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_obj())


def bound_report(name: str, lhs: float, rhs: float, tolerance: float, **context) -> BoundReport:
    """Report for an inequality lhs <= rhs."""
    if math.isinf(rhs) and math.isinf(lhs):
        slack = 0.0 if lhs == rhs else -math.inf
    else:
        slack = rhs - lhs
    return BoundReport(name, lhs, rhs, slack, tolerance, context)


def equality_report(name: str, lhs: float, rhs: float, tolerance: float, **context) -> BoundReport:
    """Report for a two-sided check |lhs - rhs| <= tolerance."""
    slack = -abs(rhs - lhs)
    return BoundReport(name, lhs, rhs, slack, tolerance, context)


def write_jsonl(reports, fp) -> None:
    for r in reports:
        fp.write(r.to_json())
        fp.write("\n")
