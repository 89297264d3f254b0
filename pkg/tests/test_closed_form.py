import math
from fractions import Fraction as F

import numpy as np
import pytest

from dirichlet_integrals import closed_form
from dirichlet_integrals.closed_form import (
    Convergence,
    Divergent,
    DivergenceReason,
    Exact,
    ImaginaryResidueError,
    IntegralParams,
    alternating_power_sum,
    assemble,
    binomial,
    classify,
    evaluate,
    harmonic,
    render,
)
from dirichlet_integrals.exact import SymbolicReal, to_float
from dirichlet_integrals.quadrature import adaptive_gk


def pascal_row(n):
    row = [1]
    for _ in range(n):
        row = [a + b for a, b in zip([0] + row, row + [0])]
    return row


def test_binomial_small():
    assert binomial(5, 2) == 10
    assert all(binomial(n, 0) == 1 for n in range(20))
    assert binomial(5, -1) == 0
    assert binomial(5, 6) == 0


def test_binomial_against_pascal():
    row = pascal_row(64)
    assert binomial(64, 32) == row[32] == 1832624140942590534
    assert [binomial(64, l) for l in range(65)] == row


def test_harmonic():
    assert harmonic(0) == 0
    assert harmonic(1) == 1
    assert harmonic(4) == F(1) + F(1, 2) + F(1, 3) + F(1, 4) == F(25, 12)
    with pytest.raises(ValueError):
        harmonic(-1)


def direct_alternating_sum(n, m):
    total = 0
    for l in range(n + 1):
        base = n - 2 * l
        power = 1 if m == 1 else base ** (m - 1)
        total += (-1) ** l * pascal_row(n)[l] * power
    return total


@pytest.mark.parametrize("n, m", [(2, 2), (4, 1), (12, 7), (7, 1), (30, 30)])
def test_alternating_power_sum_zero(n, m):
    assert direct_alternating_sum(n, m) == 0
    assert alternating_power_sum(n, m) == 0


@pytest.mark.parametrize("n", range(1, 13))
def test_alternating_power_sum_past_range_is_nonzero(n):
    # one step beyond m = n the identity breaks; direct summation gives 2**n n!
    expected = direct_alternating_sum(n, n + 1)
    assert expected == 2**n * math.factorial(n)
    assert alternating_power_sum(n, n + 1) == expected


@pytest.mark.parametrize("m, n, kind", [
    (1, 2, Convergence.DIVERGENT_EVEN_N),
    (1, 1, Convergence.CONDITIONALLY_CONVERGENT),
    (1, 7, Convergence.CONDITIONALLY_CONVERGENT),
    (2, 3, Convergence.ABSOLUTELY_CONVERGENT),
    (5, 5, Convergence.ABSOLUTELY_CONVERGENT),
    (3, 2, Convergence.DIVERGENT_ORIGIN),
    (2, 1, Convergence.DIVERGENT_ORIGIN),
])
def test_classify(m, n, kind):
    assert classify(m, n) is kind
    assert classify(IntegralParams(m, n)) is kind


@pytest.mark.parametrize("m, n", [(0, 3), (3, 0), (-1, -1)])
def test_rejects_nonpositive(m, n):
    with pytest.raises(ValueError):
        classify(m, n)
    with pytest.raises(ValueError):
        evaluate(m, n)


def test_origin_divergence_grows_like_log():
    # sin(x)**2 / x**3 ~ 1/x near 0: each factor 100 closer adds about ln(100)
    f = lambda x: np.sin(x) ** 2 / x**3
    values = [adaptive_gk(f, [d, 1.0], 1e-10)[0] for d in (1e-2, 1e-4, 1e-6)]
    steps = np.diff(values)
    assert np.allclose(steps, math.log(100), rtol=1e-3)


@pytest.mark.parametrize("m, n, expected", [
    (1, 1, Exact(SymbolicReal(F(1, 2)))),
    (2, 3, Exact(SymbolicReal(0, {3: F(3, 4)}))),
    (5, 5, Exact(SymbolicReal(F(115, 384)))),
    (4, 5, Exact(SymbolicReal(0, {5: F(125, 96), 3: F(-45, 32)}))),
    (1, 2, Divergent(DivergenceReason.EVEN_N_WITH_M1)),
    (4, 3, Divergent(DivergenceReason.ORIGIN_SINGULARITY)),
])
def test_evaluate_examples(m, n, expected):
    assert evaluate(m, n) == expected


def test_equal_exponents_against_known_sum():
    # classical formula for n = m: pi / (2^m (m-1)!) * sum_{k < m/2} (-1)^k C(m,k) (m-2k)^(m-1)
    for m in range(1, 16):
        s = sum((-1) ** k * math.comb(m, k) * (m - 2 * k) ** (m - 1) for k in range((m + 1) // 2))
        expected = SymbolicReal(F(s, 2**m * math.factorial(m - 1)))
        assert evaluate(m, m) == Exact(expected)


@pytest.mark.parametrize("n", range(1, 21))
def test_assembled_imaginary_part_vanishes(n):
    for m in range(1, n + 1):
        if classify(m, n).convergent:
            assert assemble(m, n).im == SymbolicReal()


def test_parity_of_results():
    for n in range(2, 21):
        for m in range(2, n + 1):
            v = evaluate(m, n).value
            if (n - m) % 2 == 0:
                assert v.log_coeffs == {}
                assert v.pi_coeff != 0
            else:
                assert v.pi_coeff == 0


def test_results_positive():
    for n in range(1, 21):
        for m in range(1, n + 1):
            r = evaluate(m, n)
            if isinstance(r, Exact):
                assert to_float(r.value) > 0


def test_residue_check_is_enforced(monkeypatch):
    monkeypatch.setattr(closed_form, "alternating_power_sum", lambda n, m: 1)
    with pytest.raises(ImaginaryResidueError):
        evaluate(2, 3)


@pytest.mark.parametrize("result, fmt, text", [
    (Exact(SymbolicReal(F(115, 384))), "plain", "115/384*pi"),
    (Exact(SymbolicReal(0, {3: F(3, 4)})), "latex", r"\frac{3}{4}\ln 3"),
    (Exact(SymbolicReal(0, {3: F(3, 4)})), "plain", "3/4*ln(3)"),
    (Divergent(DivergenceReason.EVEN_N_WITH_M1), "plain", "divergent"),
    (Exact(SymbolicReal(0, {2: 1})), "plain", "ln(2)"),
    (Exact(SymbolicReal(0, {2: -2, 3: F(27, 16)})), "plain", "-2*ln(2) + 27/16*ln(3)"),
    (Exact(SymbolicReal(0, {2: -2, 3: F(27, 16)})), "latex", r"-2\ln 2 + \frac{27}{16}\ln 3"),
    (Exact(SymbolicReal(F(1, 2), {5: F(-1, 3)})), "plain", "1/2*pi - 1/3*ln(5)"),
    (Exact(SymbolicReal()), "plain", "0"),
])
def test_render(result, fmt, text):
    assert render(result, fmt) == text


def test_render_rejects_unknown_format():
    with pytest.raises(ValueError):
        render(Exact(SymbolicReal(1)), "html")
