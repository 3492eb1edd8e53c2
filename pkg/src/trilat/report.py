"""Verification report records."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction


@dataclass
class Report:
    check: str
    params: dict
    status: str = "pass"
    first_discrepancy: dict | None = None
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def fail(self, **discrepancy) -> "Report":
        """Mark failed, keeping only the first discrepancy seen."""
        if self.status == "pass":
            self.status = "fail"
            self.first_discrepancy = {k: _jsonable(v) for k, v in discrepancy.items()}
        return self

    def to_dict(self) -> dict:
        out = {"check": self.check, "params": _jsonable(self.params), "status": self.status,
               "first_discrepancy": self.first_discrepancy}
        if self.details:
            out["details"] = _jsonable(self.details)
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def __str__(self):
        tail = "" if self.passed else f" first discrepancy: {self.first_discrepancy}"
        return f"[{self.status.upper()}] {self.check} {json.dumps(_jsonable(self.params))}{tail}"


def _jsonable(v):
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if isinstance(v, bool) or v is None or isinstance(v, (float, str)):
        return v
    if isinstance(v, int):
        # counts outgrow JSON number precision in consumers that use doubles
        return v if abs(v) < 2**53 else str(v)
    if isinstance(v, Fraction):
        return str(v)
    return str(v)
