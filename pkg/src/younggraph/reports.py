"""Shared verdict vocabulary and machine-readable report assembly.

Reports are plain dicts serialized with sorted keys and fixed row order, so a
sweep writes byte-identical JSON for identical inputs regardless of how the
work was sharded.  Wall time is never part of the JSON body.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

HOLDS = "holds"
FAILS = "fails"
NOT_APPLICABLE = "not-applicable"


@dataclass(frozen=True)
class Verdict:
    """Outcome of one inequality check with both exact sides."""

    verdict: str
    lhs: Fraction | int | None = None
    rhs: Fraction | int | None = None
    equality: bool = False
    details: dict = field(default_factory=dict)

    @property
    def holds(self) -> bool:
        return self.verdict == HOLDS

    @property
    def applicable(self) -> bool:
        return self.verdict != NOT_APPLICABLE


def compare(lhs, rhs, direction: str) -> Verdict:
    """Verdict for lhs <op> rhs where direction is ">=" or "<=" on exact values."""
    ok = lhs >= rhs if direction == ">=" else lhs <= rhs
    return Verdict(HOLDS if ok else FAILS, lhs, rhs, equality=(lhs == rhs))


def fmt(value) -> str:
    """Exact string form for report fields (rationals as num/den)."""
    if isinstance(value, Fraction):
        return str(value)
    return str(value)


def quadruple_fields(q) -> dict:
    from .partitions import format_partition

    return {
        "lambda": format_partition(q.lam),
        "lambda_hat": format_partition(q.lam_hat),
        "mu": format_partition(q.mu),
        "mu_hat": format_partition(q.mu_hat),
        "move": {"from": list(q.move.from_cell), "to": list(q.move.to_cell)},
        "removed": list(q.removed),
        "case": q.case,
    }


def build_report(command: str, parameters: dict, instances: list[dict]) -> dict:
    counterexamples = [row for row in instances if row.get("verdict") == FAILS]
    summary = {
        "total": len(instances),
        "holds": sum(1 for r in instances if r.get("verdict") == HOLDS),
        "fails": len(counterexamples),
        "not_applicable": sum(1 for r in instances if r.get("verdict") == NOT_APPLICABLE),
        "equalities": sum(1 for r in instances if r.get("equality")),
    }
    return {
        "command": command,
        "parameters": parameters,
        "instances": instances,
        "counterexamples": counterexamples,
        "summary": summary,
    }


def dump_json(obj: dict) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def write_json(obj: dict, path: str):
    with open(path, "w") as fh:
        fh.write(dump_json(obj))
