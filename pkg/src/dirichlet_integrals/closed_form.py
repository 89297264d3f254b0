"""Exact closed forms for I(m, n) = int_0^inf sin(x)**n / x**m dx."""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .exact import (
    GaussianRational,
    SymbolicComplex,
    SymbolicReal,
    i_power,
    log_of_i_times,
)

DEFAULT_MAX_N = 64


class Convergence(enum.Enum):
    ABSOLUTELY_CONVERGENT = "AbsolutelyConvergent"
    CONDITIONALLY_CONVERGENT = "ConditionallyConvergent"
    DIVERGENT_EVEN_N = "DivergentEvenN"
    DIVERGENT_ORIGIN = "DivergentOrigin"

    @property
    def convergent(self) -> bool:
        return self in (Convergence.ABSOLUTELY_CONVERGENT, Convergence.CONDITIONALLY_CONVERGENT)


class DivergenceReason(enum.Enum):
    EVEN_N_WITH_M1 = "EvenNWithM1"
    ORIGIN_SINGULARITY = "OriginSingularity"


class ImaginaryResidueError(RuntimeError):
    """The assembled sum kept a nonzero imaginary part or gamma term.

    Never caused by user input; it means the arithmetic is broken.
    """


@dataclass(frozen=True)
class IntegralParams:
    m: int
    n: int

    def __post_init__(self):
        if not isinstance(self.m, int) or not isinstance(self.n, int):
            raise TypeError("m and n must be integers")
        if self.m < 1 or self.n < 1:
            raise ValueError(f"m and n must be positive integers, got m={self.m}, n={self.n}")


@dataclass(frozen=True)
class Exact:
    value: SymbolicReal


@dataclass(frozen=True)
class Divergent:
    reason: DivergenceReason


ClosedFormResult = Union[Exact, Divergent]


def _params(m, n=None) -> IntegralParams:
    if isinstance(m, IntegralParams):
        return m
    return IntegralParams(m, n)


def binomial(n: int, l: int) -> int:
    if l < 0 or l > n:
        return 0
    return math.comb(n, l)


def harmonic(k: int) -> Fraction:
    """H_k = 1 + 1/2 + ... + 1/k, with H_0 = 0."""
    if k < 0:
        raise ValueError(f"harmonic requires k >= 0, got {k}")
    return sum((Fraction(1, j) for j in range(1, k + 1)), Fraction(0))


def alternating_power_sum(n: int, m: int) -> int:
    """sum_{l=0}^{n} (-1)**l * C(n, l) * (n - 2l)**(m - 1), with 0**0 = 1.

    Vanishes for n >= m >= 2 and, at m = 1, reduces to (1 - 1)**n = 0.
    """
    if n < 1 or m < 1:
        raise ValueError(f"n and m must be >= 1, got n={n}, m={m}")
    return sum((-1) ** l * binomial(n, l) * (n - 2 * l) ** (m - 1) for l in range(n + 1))


def classify(m, n=None) -> Convergence:
    p = _params(m, n)
    if p.m > p.n:
        return Convergence.DIVERGENT_ORIGIN
    if p.m == 1:
        return Convergence.DIVERGENT_EVEN_N if p.n % 2 == 0 else Convergence.CONDITIONALLY_CONVERGENT
    return Convergence.ABSOLUTELY_CONVERGENT


def assemble(m, n=None) -> SymbolicComplex:
    """The full complex value of the main sum, before taking the real part.

    Returns ``i**(m-n+1) / (2**n (m-1)!) * sum'_l (-1)**l C(n,l) (n-2l)**(m-1) ln[i(2l-n)]``
    where the term with 2l = n is skipped. Only meaningful for convergent (m, n).
    """
    p = _params(m, n)
    m, n = p.m, p.n
    total = SymbolicComplex()
    for l in range(n + 1):
        a = 2 * l - n
        if a == 0:
            continue
        coeff = (-1) ** l * binomial(n, l) * (n - 2 * l) ** (m - 1)
        total = total + log_of_i_times(a).scale(coeff)
    prefactor = i_power(m - n + 1) * GaussianRational(Fraction(1, 2**n * math.factorial(m - 1)))
    return total.scale(prefactor)


def evaluate(m, n=None) -> ClosedFormResult:
    p = _params(m, n)
    kind = classify(p)
    if kind is Convergence.DIVERGENT_EVEN_N:
        return Divergent(DivergenceReason.EVEN_N_WITH_M1)
    if kind is Convergence.DIVERGENT_ORIGIN:
        return Divergent(DivergenceReason.ORIGIN_SINGULARITY)

    # (C - gamma) * i**(m-1-n) / (2**n (m-1)!) * sum (-1)**l C(n,l) (n-2l)**(m-1)
    residue = alternating_power_sum(p.n, p.m)
    if residue != 0:
        raise ImaginaryResidueError(f"gamma/harmonic term does not cancel for m={p.m}, n={p.n}: {residue}")

    z = assemble(p)
    if not z.im.is_zero():
        raise ImaginaryResidueError(f"nonzero imaginary part for m={p.m}, n={p.n}: {z.im!r}")
    return Exact(z.re)


# -- rendering ---------------------------------------------------------------


def _terms(v: SymbolicReal):
    if v.pi_coeff:
        yield v.pi_coeff, None
    for prime, c in v.log_coeffs.items():
        yield c, prime


def _plain_term(c: Fraction, prime) -> str:
    basis = "pi" if prime is None else f"ln({prime})"
    return basis if c == 1 else f"{c}*{basis}"


def _latex_term(c: Fraction, prime) -> str:
    basis = r"\pi" if prime is None else rf"\ln {prime}"
    if c == 1:
        return basis
    if c.denominator == 1:
        return f"{c.numerator}{basis}"
    return rf"\frac{{{c.numerator}}}{{{c.denominator}}}{basis}"


def render_value(v: SymbolicReal, format: str = "plain") -> str:
    if format not in ("plain", "latex"):
        raise ValueError(f"unknown format {format!r}")
    term = _plain_term if format == "plain" else _latex_term
    out = ""
    for c, prime in _terms(v):
        if not out:
            out = ("-" if c < 0 else "") + term(abs(c), prime)
        else:
            out += (" - " if c < 0 else " + ") + term(abs(c), prime)
    return out or "0"


def render(r: ClosedFormResult, format: str = "plain") -> str:
    """Canonical text for a result: pi term first, then logs by ascending prime.

    >>> render(Exact(SymbolicReal(Fraction(115, 384))))
    '115/384*pi'
    """
    if isinstance(r, Divergent):
        if format not in ("plain", "latex"):
            raise ValueError(f"unknown format {format!r}")
        return r"\text{divergent}" if format == "latex" else "divergent"
    return render_value(r.value, format)
