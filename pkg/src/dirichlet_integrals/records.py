"""Flat JSON records for CLI output, one object per line."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .closed_form import ClosedFormResult, Divergent, Exact
from .exact import SymbolicReal, to_float


def format_rational(r: Fraction) -> str:
    return f"{r.numerator}/{r.denominator}"


def parse_rational(s: str) -> Fraction:
    num, den = s.split("/")
    r = Fraction(int(num), int(den))
    if format_rational(r) != s:
        raise ValueError(f"rational {s!r} is not in lowest terms")
    return r


@dataclass(frozen=True)
class OutputRecord:
    m: int
    n: int
    status: str
    pi_coeff: Optional[str] = None
    log_terms: list = field(default_factory=list)
    float_value: Optional[float] = None
    divergence_reason: Optional[str] = None

    @classmethod
    def from_result(cls, m: int, n: int, result: ClosedFormResult) -> OutputRecord:
        if isinstance(result, Divergent):
            return cls(m, n, "divergent", divergence_reason=result.reason.value)
        v = result.value
        return cls(
            m,
            n,
            "exact",
            pi_coeff=format_rational(v.pi_coeff),
            log_terms=[{"prime": p, "coeff": format_rational(c)} for p, c in v.log_coeffs.items()],
            float_value=to_float(v),
        )

    def value(self) -> Optional[SymbolicReal]:
        if self.status != "exact":
            return None
        return SymbolicReal(
            parse_rational(self.pi_coeff),
            {t["prime"]: parse_rational(t["coeff"]) for t in self.log_terms},
        )

    def to_dict(self) -> dict:
        d = {"m": self.m, "n": self.n, "status": self.status}
        if self.pi_coeff is not None:
            d["pi_coeff"] = self.pi_coeff
        d["log_terms"] = [{"prime": t["prime"], "coeff": t["coeff"]} for t in self.log_terms]
        if self.float_value is not None:
            d["float_value"] = self.float_value
        if self.divergence_reason is not None:
            d["divergence_reason"] = self.divergence_reason
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_json(cls, line: str) -> OutputRecord:
        d = json.loads(line)
        status = d["status"]
        if status not in ("exact", "divergent"):
            raise ValueError(f"unknown status {status!r}")
        return cls(
            m=d["m"],
            n=d["n"],
            status=status,
            pi_coeff=d.get("pi_coeff"),
            log_terms=[{"prime": t["prime"], "coeff": t["coeff"]} for t in d.get("log_terms", [])],
            float_value=d.get("float_value"),
            divergence_reason=d.get("divergence_reason"),
        )
