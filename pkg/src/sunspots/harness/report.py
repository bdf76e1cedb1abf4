"""Versioned JSON campaign reports.

Everything except the ``timing`` object is a pure function of the corpus,
the campaign and the seed, so ``dumps(timing=False)`` is byte-stable.
"""
from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

SCHEMA = "sunspots.report/1"
SKIPPED = "skipped"
STATUSES = ("holds", "violated", "not-applicable", SKIPPED)


@dataclass
class Report:
    campaign: str
    corpus: dict[str, Any]
    seed: int | None
    tool_version: str
    verdicts: list[dict[str, Any]] = field(default_factory=list)
    wall_seconds: float = 0.0

    @property
    def summary(self) -> dict[str, int]:
        counts = Counter(e["status"] for e in self.verdicts)
        out = {s: counts.get(s, 0) for s in STATUSES}
        out["graphs"] = len(self.verdicts)
        return out

    @property
    def violations(self) -> int:
        return self.summary["violated"]

    def to_json(self, timing: bool = True) -> dict[str, Any]:
        doc = {"schema": SCHEMA, "campaign": self.campaign, "corpus": self.corpus, "seed": self.seed,
               "tool_version": self.tool_version, "summary": self.summary, "verdicts": self.verdicts}
        if timing:
            doc["timing"] = {"wall_seconds": round(self.wall_seconds, 3)}
        return doc

    def dumps(self, timing: bool = True) -> str:
        return json.dumps(self.to_json(timing), sort_keys=True, indent=1) + "\n"

    @classmethod
    def from_json(cls, doc: dict[str, Any]) -> "Report":
        if doc.get("schema") != SCHEMA:
            raise ValueError(f"unsupported report schema {doc.get('schema')!r}")
        return cls(doc["campaign"], doc["corpus"], doc["seed"], doc["tool_version"], doc["verdicts"],
                   doc.get("timing", {}).get("wall_seconds", 0.0))


def save_report(report: Report, path: str | Path) -> None:
    Path(path).write_text(report.dumps())


def load_report(path: str | Path) -> Report:
    return Report.from_json(json.loads(Path(path).read_text()))
