"""Fourier transforms of Theta(x)/x**m as tempered distributions, evaluated
in double-precision complex arithmetic, and the exponentially damped
integral they produce.

Transform convention: F[f](k) = int f(x) exp(-i k x) dx, so damping by
exp(-eps x) moves the evaluation point to k - i*eps.
"""
from __future__ import annotations

import cmath
import math

from .closed_form import binomial, harmonic

EULER_GAMMA = 0.5772156649015329


def _log_i_times(k: complex) -> complex:
    if k.imag == 0:
        # ln(ik) = ln|k| + i(pi/2)sign(k) on the real axis
        return complex(math.log(abs(k.real)), math.copysign(math.pi / 2, k.real))
    return cmath.log(1j * k)


def ft_theta_over_x(k: complex) -> complex:
    """F[Theta(x)/x](k) = -gamma - ln(ik)."""
    k = complex(k)
    if k == 0:
        raise ValueError("F[Theta/x] is singular at k = 0")
    return -EULER_GAMMA - _log_i_times(k)


def ft_theta_over_xm(m: int, k: complex) -> complex:
    """F[Theta(x)/x**m](k) = (-ik)**(m-1)/(m-1)! * (F[Theta/x](k) + H_{m-1})."""
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    k = complex(k)
    base = ft_theta_over_x(k)
    if m == 1:
        return base
    return (-1j * k) ** (m - 1) / math.factorial(m - 1) * (base + float(harmonic(m - 1)))


def eval_regularized(m: int, n: int, eps: float) -> complex:
    """int_0^inf sin(x)**n / x**m * exp(-eps x) dx via the transform sum.

    Both the logarithmic part and the (H_{m-1} - gamma) part are kept; the
    latter only vanishes in the eps -> 0 limit.
    """
    if not eps > 0:
        raise ValueError(f"eps must be > 0, got {eps}")
    if m < 1 or n < 1:
        raise ValueError(f"m and n must be positive, got m={m}, n={n}")
    if m > n:
        raise ValueError(f"regularized sum requires n >= m, got m={m}, n={n}")
    terms = [
        (-1) ** l * binomial(n, l) * ft_theta_over_xm(m, complex(2 * l - n, -eps))
        for l in range(n + 1)
    ]
    s = complex(math.fsum(t.real for t in terms), math.fsum(t.imag for t in terms))
    return s / (2j) ** n
