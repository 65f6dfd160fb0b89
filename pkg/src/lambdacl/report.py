"""Check records and the JSON report format shared by verifiers and the CLI."""
from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any, Iterable

TOOL_VERSION = "0.1.0"
TIMING_KEYS = ("seconds", "total_seconds")


@dataclass
class Check:
    """One exact comparison.  ``passed`` is expected == actual, nothing looser."""

    id: str
    anchor: str
    inputs: dict
    expected: Any
    actual: Any
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return _plain(self.expected) == _plain(self.actual)

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "anchor": self.anchor,
            "inputs": encode(self.inputs),
            "expected": encode(self.expected),
            "actual": encode(self.actual),
            "pass": self.passed,
            "seconds": round(self.seconds, 6),
        }


@dataclass
class CheckList:
    checks: list[Check] = field(default_factory=list)

    def add(self, check: Check) -> Check:
        self.checks.append(check)
        return check

    def extend(self, more: Iterable[Check]):
        self.checks.extend(more)

    def __iter__(self):
        return iter(self.checks)

    def __len__(self):
        return len(self.checks)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]


def timed(fn, *args, **kwargs):
    t0 = time.perf_counter()
    out = fn(*args, **kwargs)
    return out, time.perf_counter() - t0


def _plain(x):
    # tuples and lists compare equal; everything else by value
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    if isinstance(x, dict):
        return {k: _plain(v) for k, v in x.items()}
    return x


def encode(x):
    """JSON-safe form: integers and fractions become decimal strings."""
    if isinstance(x, bool) or x is None:
        return x
    if isinstance(x, int):
        return str(x)
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, float):
        return x
    if isinstance(x, str):
        return x
    if isinstance(x, dict):
        return {str(k): encode(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [encode(v) for v in x]
    return str(x)


def build_report(checks: Iterable[Check], config: dict) -> dict:
    records = sorted((c.to_json() for c in checks), key=lambda r: r["id"])
    npass = sum(1 for r in records if r["pass"])
    return {
        "tool": "lambdacl",
        "version": TOOL_VERSION,
        "config": encode(config),
        "summary": {"total": len(records), "passed": npass, "failed": len(records) - npass},
        "records": records,
    }


def write_report(report: dict, path: str | Path):
    Path(path).write_text(json.dumps(report, indent=2, sort_keys=True) + "\n")


def strip_timing(obj):
    """Copy of a report with timing fields removed, for determinism comparisons."""
    if isinstance(obj, dict):
        return {k: strip_timing(v) for k, v in obj.items() if k not in TIMING_KEYS}
    if isinstance(obj, list):
        return [strip_timing(v) for v in obj]
    return obj
