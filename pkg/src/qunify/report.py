"""Structured verification reports.

Every checker returns a :class:`Report`: one :class:`Check` per tested
index (and kind), carrying both sides of the compared identity so a failure
can be shown as a concrete counterexample.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Optional

PASS = "pass"
FAIL = "fail"
NOT_APPLICABLE = "not-applicable"
HYPOTHESIS_FAILED = "hypothesis-failed"

STATUSES = (PASS, FAIL, NOT_APPLICABLE, HYPOTHESIS_FAILED)


@dataclass
class Check:
    n: Optional[int]
    status: str
    label: str = ""
    lhs: Any = None
    rhs: Any = None
    note: str = ""

    def to_dict(self) -> dict:
        out = {"n": self.n, "status": self.status}
        if self.label:
            out["label"] = self.label
        if self.lhs is not None:
            out["lhs"] = str(self.lhs)
        if self.rhs is not None:
            out["rhs"] = str(self.rhs)
        if self.note:
            out["note"] = self.note
        return out


@dataclass
class Report:
    name: str
    family: Optional[str] = None
    params: dict = field(default_factory=dict)
    checks: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    def add(self, n, status, label="", lhs=None, rhs=None, note="") -> Check:
        if status not in STATUSES:
            raise ValueError(f"unknown status {status!r}")
        c = Check(n, status, label, lhs, rhs, note)
        self.checks.append(c)
        return c

    def compare(self, n, lhs, rhs, label="", note="") -> bool:
        ok = lhs == rhs
        self.add(n, PASS if ok else FAIL, label, lhs, rhs, note)
        return ok

    def extend(self, other: "Report", prefix: str = "") -> None:
        for c in other.checks:
            label = f"{prefix}{c.label}" if prefix else c.label
            self.checks.append(Check(c.n, c.status, label, c.lhs, c.rhs, c.note))
        self.notes.extend(other.notes)

    @property
    def passed(self) -> bool:
        """No check failed.  Not-applicable and hypothesis-failed entries are allowed."""
        return not any(c.status == FAIL for c in self.checks)

    @property
    def all_pass(self) -> bool:
        """Every check is a plain pass."""
        return bool(self.checks) and all(c.status == PASS for c in self.checks)

    def failures(self) -> list:
        return [c for c in self.checks if c.status == FAIL]

    def with_status(self, status: str) -> list:
        return [c for c in self.checks if c.status == status]

    def counts(self) -> dict:
        out = {s: 0 for s in STATUSES}
        for c in self.checks:
            out[c.status] += 1
        return out

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "family": self.family,
            "params": {k: str(v) for k, v in self.params.items()},
            "passed": self.passed,
            "counts": self.counts(),
            "checks": [c.to_dict() for c in self.checks],
            "notes": list(self.notes),
        }

    def summary(self) -> str:
        counts = ", ".join(f"{k}={v}" for k, v in self.counts().items() if v)
        verdict = "PASS" if self.passed else "FAIL"
        fam = f" [{self.family}]" if self.family else ""
        return f"{self.name}{fam}: {verdict} ({counts or 'no checks'})"

    def render(self, verbose: bool = False) -> str:
        lines = [self.summary()]
        for c in self.checks:
            if c.status == PASS and not verbose:
                continue
            where = f"n={c.n}" if c.n is not None else "-"
            label = f" {c.label}" if c.label else ""
            line = f"  {c.status:17s} {where}{label}"
            if c.status != PASS or verbose:
                if c.lhs is not None:
                    line += f"\n      lhs: {c.lhs}"
                if c.rhs is not None:
                    line += f"\n      rhs: {c.rhs}"
            if c.note:
                line += f"\n      note: {c.note}"
            lines.append(line)
        for note in self.notes:
            lines.append(f"  note: {note}")
        return "\n".join(lines)
