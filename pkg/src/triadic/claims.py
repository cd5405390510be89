"""Verification records shared by the checkers and the sweep driver."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Any


class ClaimId(str, enum.Enum):
    SSZ_11 = "SSZ_11"
    SUN_12A = "SUN_12A"
    SUN_12B = "SUN_12B"
    SCC1 = "SCC1"
    SCC2 = "SCC2"
    SCC3 = "SCC3"
    SCC4 = "SCC4"
    SCC5 = "SCC5"
    NK2KK = "NK2KK"
    LEMMA21 = "LEMMA21"
    LEMMA41 = "LEMMA41"
    LEMMA42 = "LEMMA42"
    AUX = "AUX"


class Mode(str, enum.Enum):
    EXACT = "exact"
    TRUNCATED = "truncated"
    BOTH = "both"


class DomainError(ValueError):
    """Parameters fall outside the hypotheses of the claim being checked."""


class PrecisionError(ArithmeticError):
    """A truncated computation cannot certify the requested number of digits."""


@dataclass(frozen=True)
class Measured:
    """What a checker observed.

    ``kind`` is ``"valuation"`` (value is an int or ``math.inf``),
    ``"valuation_at_least"`` (truncated path ran out of digits before seeing
    a nonzero one; value is the certified lower bound), ``"residue"`` (value
    in ``[0, p^modulus_exponent)``), ``"equal"`` for exact identities, or
    ``"mode_disagreement"`` when the exact and truncated paths differ (never
    passes).
    """

    kind: str
    value: Any
    modulus_exponent: int | None = None

    def as_json(self) -> dict:
        out: dict[str, Any] = {"kind": self.kind, "value": _json_value(self.value)}
        if self.modulus_exponent is not None:
            out["modulus_exponent"] = self.modulus_exponent
        return out


@dataclass(frozen=True)
class Required:
    """The bound or target a measurement is compared with.

    ``kind`` is ``"valuation_at_least"``, ``"valuation_equal"``, ``"residue"``
    or ``"equal"``.
    """

    kind: str
    value: Any
    modulus_exponent: int | None = None

    def as_json(self) -> dict:
        out: dict[str, Any] = {"kind": self.kind, "value": _json_value(self.value)}
        if self.modulus_exponent is not None:
            out["modulus_exponent"] = self.modulus_exponent
        return out


@dataclass(frozen=True)
class ClaimResult:
    claim_id: ClaimId
    params: dict
    measured: Measured
    required: Required
    mode: Mode
    vacuous: bool = False
    parts: tuple["ClaimResult", ...] = field(default=())
    note: str = ""

    @property
    def passed(self) -> bool:
        return verdict(self.measured, self.required)

    @classmethod
    def combine(cls, claim_id: ClaimId, params: dict, parts, mode: Mode = Mode.EXACT) -> "ClaimResult":
        """Bundle sub-claims; the bundle passes iff every part does."""
        parts = tuple(parts)
        return cls(
            claim_id,
            params,
            Measured("equal", all(part.passed for part in parts)),
            Required("equal", True),
            mode,
            vacuous=all(part.vacuous for part in parts),
            parts=parts,
        )

    def sort_key(self) -> tuple:
        # ints sort numerically, everything else by its string form
        return (self.claim_id.value,
                tuple((k, (0, v, "") if isinstance(v, int) else (1, 0, str(v)))
                      for k, v in sorted(self.params.items())))

    def as_json(self) -> dict:
        out = {
            "schema_version": SCHEMA_VERSION,
            "claim_id": self.claim_id.value,
            "params": dict(sorted(self.params.items())),
            "measured": self.measured.as_json(),
            "required": self.required.as_json(),
            "vacuous": self.vacuous,
            "mode": self.mode.value,
            "pass": self.passed,
        }
        if self.parts:
            out["parts"] = [part.as_json() for part in self.parts]
        if self.note:
            out["note"] = self.note
        return out


SCHEMA_VERSION = 1


def verdict(measured: Measured, required: Required) -> bool:
    if required.kind == "valuation_at_least":
        if measured.kind in ("valuation", "valuation_at_least"):
            return measured.value >= required.value
        return False
    if required.kind == "valuation_equal":
        return measured.kind == "valuation" and measured.value == required.value
    if required.kind == "residue":
        return measured.kind == "residue" and measured.value == required.value
    if required.kind == "equal":
        return measured.kind == "equal" and bool(measured.value)
    raise ValueError(f"unknown requirement kind {required.kind!r}")


def _json_value(v: Any) -> Any:
    if isinstance(v, float) and math.isinf(v):
        return "infinity"
    if isinstance(v, bool):
        return v
    if isinstance(v, int) and abs(v) >= 2**53:
        return str(v)
    return v
