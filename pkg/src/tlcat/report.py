"""Machine-readable verification reports shared by every verifier."""

from __future__ import annotations

import json

__all__ = ["VerificationReport", "SCHEMA_VERSION"]

SCHEMA_VERSION = 1


class VerificationReport:
    """A suite of named checks with pass/fail records and optional witnesses.

    Serialized reports omit wall time by default so that repeated runs with
    the same seed produce identical bytes; timing is reported separately.
    """

    def __init__(self, suite: str):
        self.suite = suite
        self.cases: list = []
        self.wall_time: float | None = None

    def add(self, identity: str, params: dict, ok: bool, witness: dict | None = None):
        rec = {
            "identity": identity,
            "params": params,
            "status": "pass" if ok else "fail",
        }
        if witness is not None:
            rec["witness"] = witness
        self.cases.append(rec)
        return ok

    def check(self, identity: str, params: dict, lhs, rhs) -> bool:
        """Record lhs == rhs, keeping the offending sides on failure."""
        ok = lhs == rhs
        witness = None
        if not ok:
            witness = {
                "lhs": _show(lhs),
                "rhs": _show(rhs),
                "diff": _show(lhs - rhs) if hasattr(lhs, "__sub__") else None,
            }
        return self.add(identity, params, ok, witness)

    def extend(self, other: "VerificationReport"):
        self.cases.extend(other.cases)

    @property
    def n_pass(self) -> int:
        return sum(1 for c in self.cases if c["status"] == "pass")

    @property
    def n_fail(self) -> int:
        return sum(1 for c in self.cases if c["status"] == "fail")

    @property
    def ok(self) -> bool:
        return self.n_fail == 0 and self.cases != []

    def failures(self) -> list:
        return [c for c in self.cases if c["status"] == "fail"]

    def to_json(self, include_timing: bool = False) -> dict:
        out = {
            "schema": SCHEMA_VERSION,
            "suite": self.suite,
            "summary": {
                "total": len(self.cases),
                "pass": self.n_pass,
                "fail": self.n_fail,
            },
            "cases": self.cases,
        }
        if include_timing:
            out["wall_time_s"] = self.wall_time
        return out

    def dumps(self, include_timing: bool = False) -> str:
        return json.dumps(
            self.to_json(include_timing), indent=2, sort_keys=True, default=str
        )

    def summary_line(self) -> str:
        mark = "PASS" if self.ok else "FAIL"
        return f"[{mark}] {self.suite}: {self.n_pass}/{len(self.cases)} checks passed"

    def __repr__(self):
        return f"VerificationReport({self.summary_line()})"


def _show(x):
    if hasattr(x, "to_text"):
        return x.to_text()
    return str(x)
