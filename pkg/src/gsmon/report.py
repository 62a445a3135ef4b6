"""Check outcome records shared by every verification routine."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .rational import format_rat


def show(value) -> object:
    """Render a witness value as JSON-stable data (strings, lists, dicts)."""
    if value is None or isinstance(value, (bool, int, str)):
        return value
    if isinstance(value, Fraction):
        return format_rat(value)
    if isinstance(value, dict):
        return {str(k): show(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [show(v) for v in value]
    if isinstance(value, frozenset):
        return sorted(show(v) for v in value)
    if hasattr(value, "describe"):
        return value.describe()
    return repr(value)


@dataclass
class CheckReport:
    """Outcome of one law / pullback / classification check."""

    name: str
    passed: bool
    mode: str = "exhaustive"  # exhaustive | randomized | direct
    trials: int = 0
    seed: Optional[int] = None
    witness: object = None
    note: str = ""
    subreports: list = field(default_factory=list)

    def to_json(self) -> dict:
        data = {
            "name": self.name,
            "passed": self.passed,
            "mode": self.mode,
            "trials": self.trials,
            "seed": self.seed,
            "witness": show(self.witness),
            "note": self.note,
        }
        if self.subreports:
            data["subreports"] = [r.to_json() for r in self.subreports]
        return data

    def status(self) -> str:
        return "pass" if self.passed else "FAIL"
