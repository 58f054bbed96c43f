"""Verification reports shared by the checking suites."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any


@dataclass
class VerifyReport:
    """Outcome of one check. It passes exactly when ``mismatches`` is empty."""

    suite: str
    params: dict[str, Any] = field(default_factory=dict)
    mismatches: list[Any] = field(default_factory=list)
    info: dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.mismatches

    def fail(self, **payload) -> None:
        self.mismatches.append(payload)

    def to_json_obj(self) -> dict:
        return {
            "suite": self.suite,
            "params": self.params,
            "pass": self.passed,
            "details": {"mismatches": self.mismatches, **self.info},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), sort_keys=True)

    def __str__(self):
        status = "PASS" if self.passed else "FAIL"
        params = ", ".join(f"{k}={v}" for k, v in self.params.items())
        return f"{status} {self.suite}({params})"


def merge(suite: str, reports: list[VerifyReport], **params) -> VerifyReport:
    """Fold many reports into one, keeping every mismatch."""
    out = VerifyReport(suite, dict(params))
    for r in reports:
        for m in r.mismatches:
            out.fail(check=str(r), **m)
    out.info["checks"] = len(reports)
    return out
