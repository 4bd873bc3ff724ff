from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Optional

import pandas as pd


@dataclass(frozen=True)
class Failure:
    input: Any
    expected: Any
    got: Any

    def to_dict(self) -> dict:
        return {"input": self.input, "expected": self.expected, "got": self.got}

    @classmethod
    def from_dict(cls, data: dict) -> "Failure":
        return cls(data["input"], data["expected"], data["got"])


@dataclass
class SuiteReport:
    suite: str
    asserting: bool
    cases: int
    passed: int
    failures: list[Failure] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    wall_time: Optional[float] = None

    def __post_init__(self):
        if self.passed + len(self.failures) != self.cases:
            raise ValueError(
                f"{self.suite}: {self.passed} passed + {len(self.failures)} failed != {self.cases} cases"
            )

    @property
    def ok(self) -> bool:
        """Report-only suites never fail."""
        return not self.asserting or not self.failures

    def to_dict(self, timing: bool = True) -> dict:
        out = {
            "suite": self.suite,
            "asserting": self.asserting,
            "cases": self.cases,
            "passed": self.passed,
            "failures": [f.to_dict() for f in self.failures],
            "notes": list(self.notes),
        }
        if timing:
            out["wall_time"] = self.wall_time
        return out

    @classmethod
    def from_dict(cls, data: dict) -> "SuiteReport":
        return cls(
            suite=data["suite"],
            asserting=data["asserting"],
            cases=data["cases"],
            passed=data["passed"],
            failures=[Failure.from_dict(f) for f in data.get("failures", [])],
            notes=list(data.get("notes", [])),
            wall_time=data.get("wall_time"),
        )

    def to_json(self, timing: bool = True) -> str:
        return json.dumps(self.to_dict(timing), sort_keys=True, ensure_ascii=False)


def summary_frame(reports: list[SuiteReport], timing: bool = False) -> pd.DataFrame:
    rows = []
    for r in reports:
        row = {
            "suite": r.suite,
            "mode": "assert" if r.asserting else "report",
            "cases": r.cases,
            "passed": r.passed,
            "failures": len(r.failures),
            "status": "ok" if not r.failures else ("FAIL" if r.asserting else "findings"),
        }
        if timing:
            row["wall_time"] = round(r.wall_time or 0.0, 2)
        rows.append(row)
    return pd.DataFrame(rows)


def format_reports(reports: list[SuiteReport], timing: bool = False, max_failures: int = 20) -> str:
    lines = [summary_frame(reports, timing).to_string(index=False)]
    for r in reports:
        if not r.notes and not r.failures:
            continue
        lines.append("")
        lines.append(f"== {r.suite} ==")
        lines.extend(f"  {note}" for note in r.notes)
        label = "failure" if r.asserting else "finding"
        for f in r.failures[:max_failures]:
            lines.append(f"  {label}: input={json.dumps(f.input, ensure_ascii=False)} "
                         f"expected={json.dumps(f.expected, ensure_ascii=False)} "
                         f"got={json.dumps(f.got, ensure_ascii=False)}")
        if len(r.failures) > max_failures:
            lines.append(f"  ... {len(r.failures) - max_failures} more")
    return "\n".join(lines) + "\n"


def reports_to_json(reports: list[SuiteReport], timing: bool = False) -> str:
    payload = {
        "ok": all(r.ok for r in reports),
        "reports": [r.to_dict(timing) for r in reports],
    }
    return json.dumps(payload, indent=2, sort_keys=True, ensure_ascii=False) + "\n"
