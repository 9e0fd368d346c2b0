"""Structured results of verification checks."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Iterable

DEFAULT_CAP = 10


@dataclass(frozen=True, order=True)
class Counterexample:
    graph6: str
    detail: str

    def as_dict(self) -> dict[str, str]:
        return {"graph6": self.graph6, "detail": self.detail}


@dataclass
class Report:
    check: str
    params: dict[str, Any]
    counterexamples: list[Counterexample] = field(default_factory=list)
    graphs_examined: int = 0
    violations: int = 0
    elapsed_ms: int = 0
    info: list[str] = field(default_factory=list)
    cap: int = DEFAULT_CAP

    @property
    def status(self) -> str:
        return "fail" if self.counterexamples else "pass"

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def add(self, failures: Iterable[Counterexample], examined: int = 0) -> None:
        failures = list(failures)
        self.violations += len(failures)
        self.graphs_examined += examined
        self.counterexamples = sorted(set(self.counterexamples) | set(failures))[: self.cap]

    def merge(self, other: Report) -> Report:
        """Order-insensitive combination of two partial reports of one check."""
        out = Report(self.check, dict(self.params), cap=self.cap)
        out.counterexamples = sorted(set(self.counterexamples) | set(other.counterexamples))[: self.cap]
        out.graphs_examined = self.graphs_examined + other.graphs_examined
        out.violations = self.violations + other.violations
        out.elapsed_ms = self.elapsed_ms + other.elapsed_ms
        out.info = sorted(set(self.info) | set(other.info))
        return out

    def as_dict(self) -> dict[str, Any]:
        return {
            "check": self.check,
            "params": self.params,
            "status": self.status,
            "counterexamples": [c.as_dict() for c in self.counterexamples],
            "stats": {
                "graphs_examined": self.graphs_examined,
                "violations": self.violations,
                "elapsed_ms": self.elapsed_ms,
            },
            "info": self.info,
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2)

    def to_text(self) -> str:
        params = " ".join(f"{k}={v}" for k, v in self.params.items())
        lines = [
            f"{self.check:<28} {self.status.upper():<5} "
            f"graphs_examined={self.graphs_examined:<8} violations={self.violations:<5} "
            f"elapsed_ms={self.elapsed_ms}  {params}".rstrip()
        ]
        for c in self.counterexamples:
            lines.append(f"  {c.graph6:<16} {c.detail}")
        for line in self.info:
            lines.append(f"  # {line}")
        return "\n".join(lines)


def render_report(report: Report, fmt: str = "text") -> str:
    if fmt == "json":
        return report.to_json()
    if fmt == "text":
        return report.to_text()
    raise ValueError(f"unknown report format {fmt!r}")
