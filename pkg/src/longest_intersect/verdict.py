"""Closed verdict vocabulary shared by every check."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Iterable

HOLDS = "holds"
VIOLATED = "violated"
INCONCLUSIVE = "inconclusive"
NOT_APPLICABLE = "not-applicable"
STATUSES = (HOLDS, VIOLATED, INCONCLUSIVE, NOT_APPLICABLE)


@dataclass(frozen=True)
class Verdict:
    status: str
    reason: str = ""
    witness: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.status not in STATUSES:
            raise ValueError(f"unknown verdict status {self.status!r}")

    @property
    def ok(self) -> bool:
        return self.status != VIOLATED

    def to_json(self) -> dict[str, Any]:
        out: dict[str, Any] = {"status": self.status}
        if self.reason:
            out["reason"] = self.reason
        if self.witness:
            out["witness"] = self.witness
        return out


def holds(reason: str = "", **witness: Any) -> Verdict:
    return Verdict(HOLDS, reason, witness)


def violated(reason: str, **witness: Any) -> Verdict:
    return Verdict(VIOLATED, reason, witness)


def inconclusive(reason: str, **witness: Any) -> Verdict:
    return Verdict(INCONCLUSIVE, reason, witness)


def not_applicable(reason: str) -> Verdict:
    return Verdict(NOT_APPLICABLE, reason)


def combine(verdicts: Iterable[Verdict]) -> Verdict:
    """Fold many instance verdicts into one: any violation wins, then inconclusive, then holds."""
    vs = list(verdicts)
    for status in (VIOLATED, INCONCLUSIVE, HOLDS):
        hits = [v for v in vs if v.status == status]
        if hits:
            first = hits[0]
            return Verdict(status, first.reason, dict(first.witness, instances=len(hits)))
    return vs[0] if vs else not_applicable("no instances")
