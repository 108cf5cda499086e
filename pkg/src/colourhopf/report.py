"""Structured result of a single identity check."""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Any

import numpy as np

__all__ = ["CheckReport", "finish", "max_abs"]


@dataclass
class CheckReport:
    """Outcome of one numerical identity check.

    ``passed`` is derived, never stored: a check passes iff its residual is
    strictly below its threshold (so a NaN residual always fails).
    """
    name: str
    residual: float
    threshold: float
    params: dict[str, Any] = field(default_factory=dict)
    elapsed_micros: int = 0
    suite: str = ""

    @property
    def passed(self) -> bool:
        return bool(self.residual < self.threshold)

    def to_dict(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "suite": self.suite,
            "params": self.params,
            "residual": float(self.residual),
            "threshold": float(self.threshold),
            "pass": self.passed,
            "elapsedMicros": int(self.elapsed_micros),
        }

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> "CheckReport":
        return cls(name=d["name"], residual=d["residual"], threshold=d["threshold"],
                   params=d.get("params", {}), elapsed_micros=d.get("elapsedMicros", 0),
                   suite=d.get("suite", ""))

    def __str__(self):
        flag = "PASS" if self.passed else "FAIL"
        return f"[{flag}] {self.name} residual={self.residual:.3e} threshold={self.threshold:.1e} {self.params}"


def max_abs(a) -> float:
    a = np.asarray(a)
    if a.size == 0:
        return 0.0
    return float(np.max(np.abs(a)))


def finish(name: str, residual: float, threshold: float, t0: float, **params) -> CheckReport:
    """Build a report; ``t0`` is a ``time.perf_counter()`` stamp taken at check start."""
    elapsed = int(round((time.perf_counter() - t0) * 1e6))
    return CheckReport(name=name, residual=float(residual), threshold=float(threshold),
                       params=params, elapsed_micros=elapsed)
