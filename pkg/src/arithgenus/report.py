"""Serialized report documents.

Every integer is written as a decimal string and every rational as
``"p/q"``, so consumers never lose precision.  Booleans, ``None`` and the
timing float are written natively.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

SCHEMA_VERSION = 1


def encode(obj: Any) -> Any:
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, float):
        return obj
    if hasattr(obj, "to_dict"):
        return encode(obj.to_dict())
    if isinstance(obj, dict):
        return {str(k): encode(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [encode(v) for v in obj]
    raise TypeError(f"cannot serialize {type(obj).__name__}")


@dataclass
class ReportDocument:
    """One invocation's output: parameters echo, result payload and timing."""

    kind: str
    command: dict
    result: Any
    timing: dict = field(default_factory=dict)
    schema_version: int = SCHEMA_VERSION

    def to_dict(self) -> dict:
        return {
            "schema_version": encode(self.schema_version),
            "kind": self.kind,
            "command": encode(self.command),
            "result": encode(self.result),
            "timing": self.timing,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    @classmethod
    def from_json(cls, text: str) -> "ReportDocument":
        d = json.loads(text)
        return cls(
            kind=d["kind"],
            command=d["command"],
            result=d["result"],
            timing=d.get("timing", {}),
            schema_version=int(d["schema_version"]),
        )

    def typed_result(self) -> Any:
        """Rebuild the domain objects held in an already-decoded ``result``."""
        from .constructions import ProjectionResult
        from .families import CounterexampleRecord, GapRecord, VerificationReport
        from .invariants import VarietyReport

        res = self.result
        if self.kind in ("analyze", "hypersurface"):
            return VarietyReport.from_dict(res["report"])
        if self.kind == "product":
            return {
                k: VarietyReport.from_dict(res[k]) if res.get(k) else None
                for k in ("left", "right", "pipeline")
            }
        if self.kind == "family-maincorr":
            return [CounterexampleRecord.from_dict(r) for r in res["records"]]
        if self.kind == "family-gap":
            return [GapRecord.from_dict(r) for r in res["records"]]
        if self.kind == "verify-prod":
            return VerificationReport.from_dict(res)
        if self.kind == "project":
            return ProjectionResult.from_dict(res["projection"])
        raise ValueError(f"unknown report kind {self.kind!r}")
