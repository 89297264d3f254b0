"""Command line interface.

Exit codes: 0 success, 1 usage error, 2 divergent integral (``eval`` only),
3 verification failure.
"""
from __future__ import annotations

import json
import sys

import click

from .closed_form import DEFAULT_MAX_N, Divergent, evaluate, render
from .kernel import eval_regularized
from .quadrature import QuadratureConfig, QuadratureError, integrate_regularized
from .records import OutputRecord
from .verification import run_all

EXIT_OK, EXIT_USAGE, EXIT_DIVERGENT, EXIT_VERIFY_FAILED = 0, 1, 2, 3

_RENDER_FORMAT = {"text": "plain", "latex": "latex"}

format_option = click.option(
    "--format", "fmt", type=click.Choice(["text", "json", "latex"]), default="text", show_default=True
)
cap_option = click.option(
    "--cap", type=int, default=DEFAULT_MAX_N, show_default=True, help="Largest n accepted."
)


class _Group(click.Group):
    """Maps click's usage errors to exit code 1; exit 2 is reserved for divergence."""

    def main(self, args=None, prog_name=None, complete_var=None, standalone_mode=True, **extra):
        try:
            rv = super().main(args, prog_name, complete_var, standalone_mode=False, **extra)
        except click.ClickException as exc:
            exc.show()
            sys.exit(EXIT_USAGE)
        except click.Abort:
            click.echo("Aborted!", err=True)
            sys.exit(EXIT_USAGE)
        sys.exit(rv if isinstance(rv, int) else EXIT_OK)


def _check_mn(m: int, n: int, cap: int):
    if m < 1 or n < 1:
        raise click.UsageError(f"m and n must be positive integers (got m={m}, n={n})")
    if n > cap:
        raise click.UsageError(f"n={n} exceeds the configured cap {cap}; raise it with --cap")


@click.group(cls=_Group)
def main():
    """Exact values of int_0^inf sin(x)^n / x^m dx."""


@main.command("eval")
@click.argument("m", type=int)
@click.argument("n", type=int)
@format_option
@cap_option
def cmd_eval(m, n, fmt, cap):
    """Evaluate I(M, N) in closed form."""
    _check_mn(m, n, cap)
    result = evaluate(m, n)
    if fmt == "json":
        click.echo(OutputRecord.from_result(m, n, result).to_json())
    else:
        click.echo(render(result, _RENDER_FORMAT[fmt]))
    return EXIT_DIVERGENT if isinstance(result, Divergent) else EXIT_OK


@main.command("table")
@click.option("--max-n", type=int, required=True)
@format_option
@cap_option
def cmd_table(max_n, fmt, cap):
    """All I(m, n) with 1 <= m <= n <= MAX_N, m ascending then n."""
    if not 1 <= max_n <= cap:
        raise click.UsageError(f"--max-n must lie in [1, {cap}] (got {max_n})")
    for m in range(1, max_n + 1):
        for n in range(m, max_n + 1):
            result = evaluate(m, n)
            if fmt == "json":
                click.echo(OutputRecord.from_result(m, n, result).to_json())
            else:
                click.echo(f"I({m},{n}) = {render(result, _RENDER_FORMAT[fmt])}")
    return EXIT_OK


@main.command("verify")
@click.option("--max-n", type=int, required=True, help="Quadrature agreement is checked for n <= MAX_N.")
@click.option("--abs-tol", type=float, default=None, help="Quadrature tolerance (default 1e-10, or 1e-6 for m = 1).")
@format_option
@cap_option
def cmd_verify(max_n, abs_tol, fmt, cap):
    """Run golden-value, identity, parity and quadrature checks."""
    if not 1 <= max_n <= cap:
        raise click.UsageError(f"--max-n must lie in [1, {cap}] (got {max_n})")
    if abs_tol is not None and not abs_tol > 0:
        raise click.UsageError("--abs-tol must be > 0")
    passed = failed = 0
    for check in run_all(max_n, abs_tol):
        if check.passed:
            passed += 1
        else:
            failed += 1
        if fmt == "json":
            click.echo(json.dumps(check.to_dict(), separators=(",", ":")))
        else:
            status = "PASS" if check.passed else "FAIL"
            click.echo(f"{status} {check.group} {check.case} {check.detail}".rstrip())
    if fmt == "json":
        click.echo(json.dumps({"summary": {"passed": passed, "failed": failed}}, separators=(",", ":")))
    else:
        click.echo(f"{passed} passed, {failed} failed")
    return EXIT_OK if failed == 0 else EXIT_VERIFY_FAILED


@main.command("reg")
@click.argument("m", type=int)
@click.argument("n", type=int)
@click.option("--eps", type=float, required=True, help="Damping rate of exp(-eps*x); must be > 0.")
@click.option("--abs-tol", type=float, default=None)
@format_option
def cmd_reg(m, n, eps, abs_tol, fmt):
    """Damped integral: transform-sum value next to direct quadrature."""
    if not eps > 0:
        raise click.UsageError(f"--eps must be > 0 (got {eps})")
    if m < 1 or n < m:
        raise click.UsageError(f"need 1 <= m <= n (got m={m}, n={n})")
    if abs_tol is not None and not abs_tol > 0:
        raise click.UsageError("--abs-tol must be > 0")
    z = eval_regularized(m, n, eps)
    try:
        est = integrate_regularized(m, n, eps, QuadratureConfig(abs_tol=abs_tol))
    except QuadratureError as exc:
        raise click.ClickException(str(exc))
    diff = z.real - est.value
    if fmt == "json":
        record = {
            "m": m,
            "n": n,
            "eps": eps,
            "closed_form_re": z.real,
            "closed_form_im": z.imag,
            "quadrature": est.value,
            "quadrature_error_bound": est.error_bound,
            "difference": diff,
        }
        click.echo(json.dumps(record, separators=(",", ":")))
    elif fmt == "latex":
        click.echo(rf"\int_0^\infty \frac{{\sin^{{{n}}} x}}{{x^{{{m}}}}} e^{{-{eps!r} x}}\,dx \approx {z.real!r}")
        click.echo(rf"\text{{quadrature}} = {est.value!r} \pm {est.error_bound:.3e}")
        click.echo(rf"\Delta = {diff:.3e}")
    else:
        click.echo(f"closed form: {z.real!r} (imag {z.imag:.3e})")
        click.echo(f"quadrature:  {est.value!r} (error bound {est.error_bound:.3e})")
        click.echo(f"difference:  {diff:.3e}")
    return EXIT_OK
