"""Exact arithmetic: rationals, Gaussian rationals and Q-linear combinations
of pi and logarithms of primes.

Because pi, ln 2, ln 3, ln 5, ... are linearly independent over the
rationals, a :class:`SymbolicReal` in canonical form (prime keys, no zero
coefficients) can be compared structurally.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Union

Rational = Fraction
RationalLike = Union[int, Fraction]


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class GaussianRational:
    """a + b*i with rational a, b."""

    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", Fraction(self.re))
        object.__setattr__(self, "im", Fraction(self.im))

    def __add__(self, other):
        other = _as_gaussian(other)
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other):
        return self + (-_as_gaussian(other))

    def __mul__(self, other):
        if isinstance(other, (SymbolicReal, SymbolicComplex)):
            return NotImplemented
        other = _as_gaussian(other)
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def times_i(self) -> GaussianRational:
        return GaussianRational(-self.im, self.re)

    def conjugate(self) -> GaussianRational:
        return GaussianRational(self.re, -self.im)

    def __truediv__(self, other):
        other = _as_gaussian(other)
        norm = other.re * other.re + other.im * other.im
        if norm == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        num = self * other.conjugate()
        return GaussianRational(num.re / norm, num.im / norm)

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        return f"GaussianRational({self.re}, {self.im})"


def _as_gaussian(x) -> GaussianRational:
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, (int, Fraction)):
        return GaussianRational(Fraction(x), Fraction(0))
    raise TypeError(f"cannot convert {type(x).__name__} to GaussianRational")


def i_power(e: int) -> GaussianRational:
    """Return i**e exactly; ``e`` may be negative."""
    return (
        GaussianRational(1, 0),
        GaussianRational(0, 1),
        GaussianRational(-1, 0),
        GaussianRational(0, -1),
    )[e % 4]


class SymbolicReal:
    """Exact value ``pi_coeff*pi + sum(c_p * ln p)`` with rational coefficients.

    Instances are immutable and always canonical: keys of ``log_coeffs`` are
    primes and zero coefficients are dropped.
    """

    __slots__ = ("_pi", "_logs")

    def __init__(self, pi_coeff: RationalLike = 0, log_coeffs: Mapping[int, RationalLike] | None = None):
        self._pi = Fraction(pi_coeff)
        logs = {}
        for p, c in (log_coeffs or {}).items():
            if not isinstance(p, int) or not _is_prime(p):
                raise ValueError(f"log basis key must be prime, got {p!r}")
            c = Fraction(c)
            if c:
                logs[p] = c
        self._logs = tuple(sorted(logs.items()))

    @classmethod
    def _raw(cls, pi: Fraction, logs: Iterable[tuple[int, Fraction]]) -> SymbolicReal:
        obj = cls.__new__(cls)
        obj._pi = pi
        obj._logs = tuple(sorted((p, c) for p, c in logs if c))
        return obj

    @property
    def pi_coeff(self) -> Fraction:
        return self._pi

    @property
    def log_coeffs(self) -> dict[int, Fraction]:
        return dict(self._logs)

    def is_zero(self) -> bool:
        return self._pi == 0 and not self._logs

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if not isinstance(other, SymbolicReal):
            return NotImplemented
        return self._pi == other._pi and self._logs == other._logs

    def __hash__(self):
        return hash((self._pi, self._logs))

    def __add__(self, other):
        if not isinstance(other, SymbolicReal):
            return NotImplemented
        logs = dict(self._logs)
        for p, c in other._logs:
            logs[p] = logs.get(p, 0) + c
        return SymbolicReal._raw(self._pi + other._pi, logs.items())

    def __neg__(self):
        return SymbolicReal._raw(-self._pi, ((p, -c) for p, c in self._logs))

    def __sub__(self, other):
        if not isinstance(other, SymbolicReal):
            return NotImplemented
        return self + (-other)

    def scale(self, r: RationalLike) -> SymbolicReal:
        r = Fraction(r)
        return SymbolicReal._raw(self._pi * r, ((p, c * r) for p, c in self._logs))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    __rmul__ = __mul__

    def __repr__(self):
        logs = ", ".join(f"{p}: {c}" for p, c in self._logs)
        return f"SymbolicReal(pi_coeff={self._pi}, log_coeffs={{{logs}}})"


ZERO = SymbolicReal()
PI = SymbolicReal(1)


@dataclass(frozen=True)
class SymbolicComplex:
    re: SymbolicReal = ZERO
    im: SymbolicReal = ZERO

    def __add__(self, other):
        if not isinstance(other, SymbolicComplex):
            return NotImplemented
        return SymbolicComplex(self.re + other.re, self.im + other.im)

    def __neg__(self):
        return SymbolicComplex(-self.re, -self.im)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, g: GaussianRational | RationalLike) -> SymbolicComplex:
        """Multiply by a Gaussian rational ``g``."""
        g = _as_gaussian(g)
        return SymbolicComplex(
            self.re.scale(g.re) - self.im.scale(g.im),
            self.im.scale(g.re) + self.re.scale(g.im),
        )

    __mul__ = scale
    __rmul__ = scale


def factor_log(k: int) -> SymbolicReal:
    """ln k expressed in the prime-log basis (trial division)."""
    if k < 1:
        raise ValueError(f"factor_log requires k >= 1, got {k}")
    exps: dict[int, int] = {}
    d = 2
    while d * d <= k:
        while k % d == 0:
            exps[d] = exps.get(d, 0) + 1
            k //= d
        d += 1
    if k > 1:
        exps[k] = exps.get(k, 0) + 1
    return SymbolicReal._raw(Fraction(0), ((p, Fraction(e)) for p, e in exps.items()))


def log_of_i_times(a: int) -> SymbolicComplex:
    """ln(i*a) = ln|a| + i*(pi/2)*sign(a) for a nonzero integer ``a``."""
    if a == 0:
        raise ValueError("ln(i*0) is undefined; the 2l = n term must be omitted by the caller")
    sign = 1 if a > 0 else -1
    return SymbolicComplex(factor_log(abs(a)), SymbolicReal(Fraction(sign, 2)))


def to_float(v: SymbolicReal) -> float:
    terms = [float(v.pi_coeff) * math.pi] if v.pi_coeff else []
    # float(Fraction) rounds correctly; math.log(p) is within an ulp
    terms.extend(float(c) * math.log(p) for p, c in v.log_coeffs.items())
    return math.fsum(terms)
