"""Checks run by ``dirichlet-integrals verify``."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as F
from typing import Iterator, Optional

from .closed_form import (
    Divergent,
    DivergenceReason,
    Exact,
    alternating_power_sum,
    classify,
    evaluate,
    render,
)
from .exact import SymbolicReal, to_float
from .quadrature import QuadratureConfig, QuadratureError, integrate_sinc_power

# Published table of I(m, n) for m = 1..5, n = m..m+2
PAPER_EXAMPLES = {
    (1, 1): Exact(SymbolicReal(F(1, 2))),
    (1, 2): Divergent(DivergenceReason.EVEN_N_WITH_M1),
    (1, 3): Exact(SymbolicReal(F(1, 4))),
    (2, 2): Exact(SymbolicReal(F(1, 2))),
    (2, 3): Exact(SymbolicReal(0, {3: F(3, 4)})),
    (2, 4): Exact(SymbolicReal(F(1, 4))),
    (3, 3): Exact(SymbolicReal(F(3, 8))),
    (3, 4): Exact(SymbolicReal(0, {2: 1})),
    (3, 5): Exact(SymbolicReal(F(5, 32))),
    (4, 4): Exact(SymbolicReal(F(1, 3))),
    (4, 5): Exact(SymbolicReal(0, {5: F(125, 96), 3: F(-45, 32)})),
    (4, 6): Exact(SymbolicReal(F(1, 8))),
    (5, 5): Exact(SymbolicReal(F(115, 384))),
    (5, 6): Exact(SymbolicReal(0, {3: F(27, 16), 2: -2})),
    (5, 7): Exact(SymbolicReal(F(77, 768))),
}

IDENTITY_MAX_N = 30
PARITY_MAX_N = 20
AGREEMENT_SLACK = 1e-9


@dataclass(frozen=True)
class CheckResult:
    group: str
    case: str
    passed: bool
    detail: str = ""

    def to_dict(self) -> dict:
        return {"group": self.group, "case": self.case, "status": "PASS" if self.passed else "FAIL", "detail": self.detail}


def check_golden() -> Iterator[CheckResult]:
    for (m, n), expected in PAPER_EXAMPLES.items():
        got = evaluate(m, n)
        yield CheckResult("golden", f"I({m},{n})", got == expected, render(got))


def check_identity(max_n: int = IDENTITY_MAX_N) -> Iterator[CheckResult]:
    for n in range(1, max_n + 1):
        for m in range(1, n + 1):
            s = alternating_power_sum(n, m)
            yield CheckResult("identity", f"n={n},m={m}", s == 0, str(s))


def check_parity(max_n: int = PARITY_MAX_N) -> Iterator[CheckResult]:
    for n in range(2, max_n + 1):
        for m in range(2, n + 1):
            v = evaluate(m, n).value
            if (n - m) % 2 == 0:
                ok = not v.log_coeffs
            else:
                ok = v.pi_coeff == 0
            yield CheckResult("parity", f"I({m},{n})", ok, render(Exact(v)))


def check_quadrature(max_n: int, abs_tol: Optional[float] = None) -> Iterator[CheckResult]:
    cfg = QuadratureConfig(abs_tol=abs_tol)
    for m in range(1, max_n + 1):
        for n in range(m, max_n + 1):
            if not classify(m, n).convergent:
                continue
            exact = to_float(evaluate(m, n).value)
            try:
                est = integrate_sinc_power(m, n, cfg)
            except QuadratureError as exc:
                yield CheckResult("quadrature", f"I({m},{n})", False, str(exc))
                continue
            diff = abs(est.value - exact)
            ok = est.converged and diff <= est.error_bound + AGREEMENT_SLACK
            detail = f"diff={diff:.3e} bound={est.error_bound:.3e}"
            if not est.converged:
                detail += f" (tolerance {cfg.tol_for(m):g} not reached)"
            yield CheckResult("quadrature", f"I({m},{n})", ok, detail)


def run_all(max_n: int, abs_tol: Optional[float] = None) -> Iterator[CheckResult]:
    yield from check_golden()
    yield from check_identity()
    yield from check_parity()
    yield from check_quadrature(max_n, abs_tol)
