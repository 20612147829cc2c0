"""Outcome records shared by every theorem check."""
from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Any

PASS = "pass"
FAIL = "fail"
SKIPPED = "skipped"
VACUOUS = "vacuous"
STATUSES = (PASS, FAIL, SKIPPED, VACUOUS)


@dataclass(frozen=True)
class Verdict:
    check_id: str
    subject: str
    status: str
    witness: Any = None
    elapsed_ms: float = 0.0
    details: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"unknown status {self.status!r}")
        if self.status == FAIL and self.witness is None:
            raise ValueError("a failing verdict needs a witness")
        if self.status == SKIPPED and self.witness is None:
            raise ValueError("a skipped verdict must name the violated cap")

    @property
    def ok(self) -> bool:
        return self.status != FAIL

    def timed(self, ms: float) -> "Verdict":
        return replace(self, elapsed_ms=ms)

    def to_json(self) -> dict:
        return {"checkId": self.check_id, "subject": self.subject, "status": self.status,
                "witness": self.witness, "elapsedMs": round(self.elapsed_ms, 3)}


def verdict(check_id: str, subject: str, failures: list, applicable: bool = True,
            details: dict | None = None) -> Verdict:
    """Fold a list of failure payloads into a verdict; the first one is the witness."""
    if failures:
        return Verdict(check_id, subject, FAIL, failures[0], details=details or {})
    return Verdict(check_id, subject, PASS if applicable else VACUOUS, details=details or {})


class TheoremViolation(RuntimeError):
    """A computed object contradicts a statement that must hold."""


def ring_label(R) -> str:
    return str(R.spec) if R.spec is not None else f"table[{R.size}]"


def subject(R, ideal=None, extra: str = "") -> str:
    parts = [ring_label(R)]
    if ideal is not None:
        parts.append("I=" + str(list(ideal.elements)))
    if extra:
        parts.append(extra)
    return " ".join(parts)
