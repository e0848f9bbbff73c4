"""Report records emitted by searches and checks."""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass, field
from typing import Any, Iterable


@dataclass
class ExtremalReport:
    n: int
    alpha: int
    k: int | None
    t: int
    objective: str
    family: str
    graphs_scanned: int
    optimum_lambda: float | None
    attainers: list[str]
    unique: bool
    cospectral_tie: bool
    predicted: str | None
    matches_prediction: bool
    witness_counterexample: str | None
    outside_guaranteed_regime: bool
    vacuous: bool = False
    notes: list[str] = field(default_factory=list)

    def to_dict(self) -> dict[str, Any]:
        return {"kind": "extremal", **dataclasses.asdict(self)}

    @property
    def violations(self) -> list:
        return []


@dataclass
class CheckEntry:
    """Outcome of one check on one graph (or one parameter point)."""

    subject: str
    applicable: bool
    violations: list[dict[str, Any]] = field(default_factory=list)
    data: dict[str, Any] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.violations


@dataclass
class CheckReport:
    check: str
    params: dict[str, Any]
    graphs_tested: int
    violations: list[dict[str, Any]]
    verdict: str
    witnesses: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    data: dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> dict[str, Any]:
        return {"kind": "check", **dataclasses.asdict(self)}

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"


def verdict_for(graphs_tested: int, violations: list) -> str:
    if violations:
        return "fail"
    return "pass" if graphs_tested > 0 else "vacuous"


def aggregate(
    check: str,
    params: dict[str, Any],
    entries: Iterable[CheckEntry],
    notes: list[str] | None = None,
    keep_data: bool = False,
) -> CheckReport:
    tested = 0
    violations: list[dict[str, Any]] = []
    data: dict[str, Any] = {}
    for e in entries:
        if e.applicable:
            tested += 1
        for v in e.violations:
            violations.append({"graph6": e.subject, **v})
        if keep_data:
            data[e.subject] = e.data
    return CheckReport(
        check,
        params,
        tested,
        violations,
        verdict_for(tested, violations),
        notes=list(notes or []),
        data=data,
    )
