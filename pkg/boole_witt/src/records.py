"""
Record types produced by the p-adic checks and the verification harness.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Number
from typing import Any, Dict, List, Optional, Tuple

import pandas as pd

try:  # package import
    from .polynomial import Poly, rational_to_str
    from .validator import EXPECTED_FAIL_IDENTITIES, IDENTITY_ORDER
except ImportError:  # script import fallback
    from polynomial import Poly, rational_to_str  # type: ignore
    from validator import EXPECTED_FAIL_IDENTITIES, IDENTITY_ORDER  # type: ignore

__all__ = ["CongruenceReport", "VerificationCase", "VerificationReport", "serialize_value"]

STATUSES = ("pass", "fail", "error")


def serialize_value(value: Any) -> Any:
    """JSON-ready form: rationals as "a/b", polynomials as coefficient lists."""
    if isinstance(value, Poly):
        return value.to_json()
    if isinstance(value, Fraction):
        return rational_to_str(value)
    if isinstance(value, (list, tuple)):
        return [serialize_value(v) for v in value]
    return value


def _display(value: Any) -> str:
    if isinstance(value, Fraction):
        return rational_to_str(value)
    return str(value)


@dataclass(frozen=True)
class CongruenceReport:
    """
    Outcome of one Witt-type congruence check.

    lhs_residue is the truncated fermionic sum, rhs_residue the embedded closed
    form; both reduced modulo ``modulus`` = p^(N - slack).
    """
    p: int
    M: int
    N: int
    n: int
    k: int
    kind: str
    lam: Fraction
    x: Fraction
    lhs_residue: int
    rhs_residue: int
    modulus: int
    agree: bool

    def to_json(self) -> Dict[str, Any]:
        return {
            "p": self.p,
            "M": self.M,
            "N": self.N,
            "n": self.n,
            "k": self.k,
            "kind": self.kind,
            "lambda": rational_to_str(self.lam),
            "x": rational_to_str(self.x),
            "lhs_residue": self.lhs_residue,
            "rhs_residue": self.rhs_residue,
            "modulus": self.modulus,
            "agree": self.agree,
        }


@dataclass
class VerificationCase:
    """
    One identity checked at one parameter tuple.

    A failing case carries ``witness = (lhs, rhs)`` with lhs != rhs exactly;
    an errored case carries the exception text in ``message``.
    """
    identity_id: str
    parameters: Dict[str, Any]
    status: str
    witness: Optional[Tuple[Any, Any]] = None
    message: Optional[str] = None

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"unknown status {self.status!r}")
        if self.status == "fail" and (self.witness is None or self.witness[0] == self.witness[1]):
            raise ValueError("a failing case needs a witness with unequal sides")

    @property
    def expected_fail(self) -> bool:
        return self.identity_id in EXPECTED_FAIL_IDENTITIES

    def sort_key(self) -> Tuple:
        rank = IDENTITY_ORDER.index(self.identity_id) if self.identity_id in IDENTITY_ORDER else len(IDENTITY_ORDER)
        params = tuple(
            (name, (0, value) if isinstance(value, Number) else (1, str(value)))
            for name, value in sorted(self.parameters.items())
        )
        return (rank, self.identity_id, params)

    def to_json(self) -> Dict[str, Any]:
        out: Dict[str, Any] = {
            "identity_id": self.identity_id,
            "parameters": {k: serialize_value(v) for k, v in sorted(self.parameters.items())},
            "status": self.status,
        }
        if self.witness is not None:
            out["witness"] = {"lhs": serialize_value(self.witness[0]), "rhs": serialize_value(self.witness[1])}
        if self.message is not None:
            out["message"] = self.message
        return out


@dataclass
class VerificationReport:
    cases: List[VerificationCase] = field(default_factory=list)
    header: Dict[str, str] = field(default_factory=dict)

    @property
    def summary(self) -> Dict[str, Dict[str, int]]:
        """Counts per identity id and status, ids in canonical order."""
        counts: Dict[str, Dict[str, int]] = {
            ident: {status: 0 for status in STATUSES} for ident in IDENTITY_ORDER
        }
        for case in self.cases:
            counts.setdefault(case.identity_id, {status: 0 for status in STATUSES})
            counts[case.identity_id][case.status] += 1
        return counts

    def sorted(self) -> "VerificationReport":
        return VerificationReport(cases=sorted(self.cases, key=VerificationCase.sort_key), header=dict(self.header))

    def failures(self, include_expected: bool = False) -> List[VerificationCase]:
        return [
            c for c in self.cases
            if c.status != "pass" and (include_expected or not c.expected_fail)
        ]

    @property
    def ok(self) -> bool:
        """True iff every case outside the expected-fail identities passes."""
        return not self.failures()

    def to_json(self) -> Dict[str, Any]:
        return {
            "header": dict(self.header),
            "summary": self.summary,
            "cases": [c.to_json() for c in self.cases],
        }

    def to_frame(self) -> pd.DataFrame:
        """One row per case; parameters flattened into a readable string."""
        rows = []
        for c in self.cases:
            rows.append({
                "identity": c.identity_id,
                "parameters": " ".join(f"{k}={_display(v)}" for k, v in sorted(c.parameters.items())),
                "status": c.status + (" (expected)" if c.expected_fail and c.status == "fail" else ""),
                "detail": c.message or (
                    f"lhs={_display(c.witness[0])} rhs={_display(c.witness[1])}" if c.witness else ""
                ),
            })
        return pd.DataFrame(rows, columns=["identity", "parameters", "status", "detail"])

    def summary_frame(self) -> pd.DataFrame:
        frame = pd.DataFrame.from_dict(self.summary, orient="index", columns=list(STATUSES))
        frame.index.name = "identity"
        return frame
