from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Any


class Status(str, Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    SKIP = "SKIP"
    # conjecture entries report this instead of PASS
    NO_COUNTEREXAMPLE = "NO-COUNTEREXAMPLE"


def jsonable(value: Any) -> Any:
    """Exact values in a JSON-safe form: ints stay ints, everything else
    exact (Fraction, Poly, QLaurent, ModNum) becomes its string form."""
    if isinstance(value, bool) or value is None or isinstance(value, (int, str)):
        return value
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else str(value)
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    return str(value)


@dataclass
class CheckResult:
    id: str
    params: dict[str, Any]
    status: Status
    witness: dict[str, Any] | None = None
    skip_reason: str | None = None
    elapsed_ms: float = 0.0
    table: list[dict[str, Any]] | None = None

    def __post_init__(self) -> None:
        self.status = Status(self.status)
        if self.status is Status.FAIL and not self.witness:
            raise ValueError(f"{self.id}: FAIL without a witness")
        if self.status is Status.SKIP and not self.skip_reason:
            raise ValueError(f"{self.id}: SKIP without a reason")
        self.params = jsonable(self.params)
        if self.witness is not None:
            self.witness = jsonable(self.witness)
        if self.table is not None:
            self.table = jsonable(self.table)

    @property
    def ok(self) -> bool:
        return self.status is not Status.FAIL

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {"id": self.id, "params": self.params, "status": self.status.value}
        if self.witness is not None:
            out["witness"] = self.witness
        if self.skip_reason is not None:
            out["skip_reason"] = self.skip_reason
        if self.table is not None:
            out["table"] = self.table
        out["elapsed_ms"] = self.elapsed_ms
        return out

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> "CheckResult":
        return cls(
            id=d["id"],
            params=d["params"],
            status=Status(d["status"]),
            witness=d.get("witness"),
            skip_reason=d.get("skip_reason"),
            elapsed_ms=d.get("elapsed_ms", 0.0),
            table=d.get("table"),
        )


class Mismatch(Exception):
    """Raised inside a check body to report the first counterexample."""

    def __init__(self, **witness: Any):
        self.witness = witness
        super().__init__(witness)


class Skip(Exception):
    """Raised inside a check body when its hypotheses exclude the instance."""

    def __init__(self, reason: str):
        self.reason = reason
        super().__init__(reason)


def expect_equal(lhs: Any, rhs: Any, **where: Any) -> None:
    if lhs != rhs:
        raise Mismatch(**where, lhs=lhs, rhs=rhs)
