# Copyright 2026 Open Collector, Inc,
#
# Permission is hereby granted, free of charge, to any person obtaining a copy
# of this software and associated documentation files (the "Software"), to deal
# in the Software without restriction, including without limitation the rights
# to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
# copies of the Software, and to permit persons to whom the Software is
# furnished to do so, subject to the following conditions:
#
# The above copyright notice and this permission notice shall be included in all
# copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
# IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
# FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
# AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
# LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
# OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE
# SOFTWARE.

import concurrent.futures
import dataclasses
import logging
import pathlib
import sys
import typing
from tokenize import TokenError

import click
import click_pathlib  # type: ignore
import sympy
from sympy.parsing.sympy_parser import parse_expr

from .boolean import delsarte_solve
from .exact import Rational, format_rational, from_sympy, parse_rational
from .exceptions import DomainError, ThetaBoundsError
from .lp import Mode, Scalar
from .orthopoly import jacobi, jacobi_alpha, krawtchouk_family
from .parser import InvalidDocumentError, load_graph_document
from .report import OutputFormat, format_decimal, render_csv, render_json, render_text
from .sphere import (
    Verification,
    VerificationFailure,
    certificate_to_dict,
    dump_certificate,
    load_certificate,
    solve_sphere_lp,
    solve_sphere_lp_float,
    verify_certificate,
)
from .symmetry import FiniteGraph, PermGroup, stable_set_bruteforce, theta_prime_reduced
from .utils import resolve_worker_count

logger = logging.getLogger(__name__)

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR")


@dataclasses.dataclass(frozen=True)
class RunConfig:
    format: OutputFormat = OutputFormat.TEXT
    mode: Mode = Mode.EXACT
    workers: int = 1


class CosineParamType(click.ParamType):
    """An exact rational, or a real closed form such as ``1/sqrt(5)``."""

    name = "cosine"

    def convert(
        self, value: typing.Any, param: typing.Any, ctx: typing.Any
    ) -> typing.Union[Rational, sympy.Expr]:
        if isinstance(value, (Rational, sympy.Expr)):
            return value
        try:
            return parse_rational(value)
        except DomainError:
            pass
        try:
            expr = parse_expr(value)
        except (AttributeError, SyntaxError, TypeError, ValueError, TokenError, sympy.SympifyError):
            self.fail(f"not a real number: {value!r}", param, ctx)
        if not isinstance(expr, sympy.Expr) or not expr.is_number or not expr.is_real:
            self.fail(f"not a real number: {value!r}", param, ctx)
        if expr.is_Rational:
            return from_sympy(expr)
        return expr


COSINE = CosineParamType()

F = typing.TypeVar("F", bound=typing.Callable[..., typing.Any])


def output_options(*formats: OutputFormat) -> typing.Callable[[F], F]:
    def decorator(f: F) -> F:
        f = click.option(
            "--format",
            "format_",
            type=click.Choice([str(v) for v in formats]),
            default=None,
            help="Output format.",
        )(f)
        f = click.option("--json", "json_", is_flag=True, help="Same as --format json.")(f)
        return f

    return decorator


def build_config(
    json_: bool,
    format_: typing.Optional[str],
    *,
    float_: bool = False,
    default: OutputFormat = OutputFormat.TEXT,
) -> RunConfig:
    if json_ and format_ is not None and format_ != OutputFormat.JSON:
        raise click.UsageError(f"--json conflicts with --format {format_}")
    if json_:
        fmt = OutputFormat.JSON
    elif format_ is not None:
        fmt = OutputFormat(format_)
    else:
        fmt = default
    requested = click.get_current_context().find_root().params.get("workers")
    try:
        workers = resolve_worker_count(requested)
    except ValueError as e:
        raise click.UsageError(str(e))
    return RunConfig(
        format=fmt,
        mode=Mode.FLOAT if float_ else Mode.EXACT,
        workers=workers,
    )


def emit(text: str) -> None:
    click.echo(text, nl=False)


@click.group()
@click.option(
    "--log-level",
    type=click.Choice(LOG_LEVELS, case_sensitive=False),
    default="WARNING",
    show_default=True,
)
@click.option(
    "--workers",
    type=click.IntRange(min=1),
    default=None,
    help="Worker processes for table sweeps (default: $THETA_BOUNDS_WORKERS or the CPU count).",
)
def main(log_level: str, workers: typing.Optional[int]) -> None:
    """Exact theta-function bounds for codes, spherical codes and symmetric graphs."""
    logging.basicConfig(
        stream=sys.stderr,
        level=log_level.upper(),
        format="%(levelname)s %(name)s: %(message)s",
    )


@main.command()
@click.option("--n", "n", type=click.IntRange(min=1), required=True)
@click.option("--k", "k", type=click.IntRange(min=0), required=True)
@output_options(OutputFormat.TEXT, OutputFormat.JSON)
def krawtchouk(n: int, k: int, json_: bool, format_: typing.Optional[str]) -> int:
    """Krawtchouk polynomial K^n_k and its values at t = 0..n."""
    config = build_config(json_, format_)
    fam = krawtchouk_family(n)
    p = fam.polynomial(k)
    values = [(t, fam.value(k, t)) for t in range(n + 1)]
    if config.format == OutputFormat.JSON:
        emit(
            render_json(
                {
                    "n": n,
                    "k": k,
                    "coefficients": [format_rational(c) for c in p.coefficients],
                    "values": [v for _, v in values],
                }
            )
        )
    else:
        emit(render_text("krawtchouk", n=n, k=k, polynomial=p, values=values))
    return 0


@main.command("jacobi")
@click.option("--n", "n", type=click.IntRange(min=2), required=True)
@click.option("--k", "k", type=click.IntRange(min=0), required=True)
@output_options(OutputFormat.TEXT, OutputFormat.JSON)
def jacobi_command(n: int, k: int, json_: bool, format_: typing.Optional[str]) -> int:
    """Jacobi polynomial of the sphere in R^n, normalized to 1 at t = 1."""
    config = build_config(json_, format_)
    p = jacobi(n, k)
    if config.format == OutputFormat.JSON:
        emit(
            render_json(
                {
                    "n": n,
                    "k": k,
                    "alpha": format_rational(jacobi_alpha(n)),
                    "coefficients": [format_rational(c) for c in p.coefficients],
                }
            )
        )
    else:
        emit(render_text("jacobi", n=n, k=k, alpha=jacobi_alpha(n), polynomial=p))
    return 0


def _scalar_repr(v: Scalar) -> typing.Union[str, float]:
    return float(v) if isinstance(v, float) else format_rational(v)


@main.command("hamming-lp")
@click.option("--n", "n", type=click.IntRange(min=1), required=True)
@click.option("--d", "d", type=click.IntRange(min=1), required=True)
@click.option("--float", "float_", is_flag=True, help="Solve in floating point.")
@output_options(OutputFormat.TEXT, OutputFormat.JSON)
def hamming_lp(
    n: int, d: int, float_: bool, json_: bool, format_: typing.Optional[str]
) -> int:
    """Delsarte LP bound for binary codes of length n and minimal distance d."""
    config = build_config(json_, format_, float_=float_)
    result = delsarte_solve(n, d, config.mode)
    if config.format == OutputFormat.JSON:
        emit(
            render_json(
                {
                    "n": n,
                    "d": d,
                    "mode": str(config.mode),
                    "bound": _scalar_repr(result.bound),
                    "bound_decimal": format_decimal(result.bound),
                    "coefficients": [_scalar_repr(f) for f in result.coefficients],
                }
            )
        )
    else:
        emit(render_text("hamming_lp", bound=result.bound))
    return 0


def table_cell(cell: typing.Tuple[int, int]) -> typing.Tuple[int, int, Rational]:
    n, d = cell
    bound = delsarte_solve(n, d).bound
    logger.info("hamming table cell n=%d d=%d done", n, d)
    return n, d, typing.cast(Rational, bound)


def sweep(
    cells: typing.Sequence[typing.Tuple[int, int]], workers: int
) -> typing.List[typing.Tuple[int, int, Rational]]:
    """Solve every cell; results come back in the order of ``cells``."""
    if workers == 1 or len(cells) <= 1:
        return [table_cell(c) for c in cells]
    with concurrent.futures.ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(table_cell, cells, chunksize=4))


@main.command("hamming-table")
@click.option("--n-max", "n_max", type=click.IntRange(min=1), required=True)
@output_options(OutputFormat.CSV, OutputFormat.JSON)
def hamming_table(n_max: int, json_: bool, format_: typing.Optional[str]) -> int:
    """Delsarte bounds for every 1 <= d <= n <= n-max."""
    config = build_config(json_, format_, default=OutputFormat.CSV)
    cells = sorted((n, d) for n in range(1, n_max + 1) for d in range(1, n + 1))
    rows = sorted(sweep(cells, config.workers))
    if config.format == OutputFormat.JSON:
        emit(
            render_json(
                {
                    "rows": [
                        {
                            "n": n,
                            "d": d,
                            "bound_exact": format_rational(b),
                            "bound_decimal": format_decimal(b),
                        }
                        for n, d, b in rows
                    ]
                }
            )
        )
    else:
        emit(
            render_csv(
                ("n", "d", "bound_exact", "bound_decimal"),
                ((n, d, format_rational(b), format_decimal(b)) for n, d, b in rows),
            )
        )
    return 0


@main.command("sphere-lp")
@click.option("--n", "n", type=click.IntRange(min=2), required=True)
@click.option("--cos-theta", "cos_theta", type=COSINE, required=True)
@click.option(
    "--degree",
    type=click.IntRange(min=1),
    default=None,
    help="Certificate degree (default: 2 for cos-theta 0, else 10).",
)
@click.option("--emit-cert", "emit_cert", type=click_pathlib.Path(dir_okay=False), default=None)
@click.option(
    "--float",
    "float_",
    is_flag=True,
    help="Solve in floating point; needed for cosines that are not rational.",
)
@output_options(OutputFormat.TEXT, OutputFormat.JSON)
def sphere_lp(
    n: int,
    cos_theta: typing.Union[Rational, sympy.Expr],
    degree: typing.Optional[int],
    emit_cert: typing.Optional[pathlib.Path],
    float_: bool,
    json_: bool,
    format_: typing.Optional[str],
) -> int:
    """LP bound for spherical codes in R^n with inner products at most cos-theta."""
    config = build_config(json_, format_, float_=float_)
    if degree is None:
        degree = 2 if cos_theta == 0 else 10
    if config.mode == Mode.FLOAT:
        if emit_cert is not None:
            raise click.UsageError("--emit-cert needs an exact solve; drop --float")
        return _sphere_lp_float(config, n, cos_theta, degree)
    if not isinstance(cos_theta, Rational):
        raise click.UsageError(f"cos-theta {cos_theta} is not rational; pass --float")
    result = solve_sphere_lp(n, cos_theta, degree)
    if emit_cert is not None:
        dump_certificate(result.certificate, emit_cert)
    if config.format == OutputFormat.JSON:
        doc = certificate_to_dict(result.certificate)
        doc.update(
            {
                "mode": str(config.mode),
                "lower_bound": format_rational(result.lower_bound),
                "exact": result.converged_exactly,
                "iterations": result.iterations,
                "max_degree": degree,
            }
        )
        emit(render_json(doc))
    else:
        emit(
            render_text(
                "sphere_lp",
                certificate=result.certificate,
                lower_bound=result.lower_bound,
                iterations=result.iterations,
            )
        )
    return 0


def _sphere_lp_float(
    config: RunConfig, n: int, cos_theta: typing.Union[Rational, sympy.Expr], degree: int
) -> int:
    result = solve_sphere_lp_float(n, float(cos_theta), degree)
    if config.format == OutputFormat.JSON:
        emit(
            render_json(
                {
                    "space": "sphere",
                    "mode": str(config.mode),
                    "n": n,
                    "cos_theta": str(cos_theta),
                    "max_degree": degree,
                    "bound": result.bound,
                    "bound_decimal": format_decimal(result.bound),
                    "coeffs": list(result.coeffs),
                    "lower_bound": result.lower_bound,
                    "iterations": result.iterations,
                    "max_violation": result.max_violation,
                }
            )
        )
    else:
        emit(render_text("sphere_lp_float", result=result))
    return 0


@main.command()
@click.option(
    "--certificate",
    "path",
    type=click_pathlib.Path(exists=True, dir_okay=False),
    required=True,
)
@output_options(OutputFormat.TEXT, OutputFormat.JSON)
def verify(path: pathlib.Path, json_: bool, format_: typing.Optional[str]) -> int:
    """Check a certificate file exactly; exit 1 if it does not prove its bound."""
    config = build_config(json_, format_)
    certificate = None
    try:
        certificate = load_certificate(path)
        verification = verify_certificate(certificate)
    except InvalidDocumentError as e:
        verification = Verification(False, VerificationFailure.MALFORMED_CERTIFICATE, str(e))
    if config.format == OutputFormat.JSON:
        emit(
            render_json(
                {
                    "valid": verification.valid,
                    "reason": str(verification.reason) if verification.reason else None,
                    "detail": verification.detail,
                    "bound": format_rational(certificate.bound)
                    if certificate is not None
                    else None,
                }
            )
        )
    else:
        emit(render_text("verify", verification=verification, certificate=certificate))
    return 0 if verification else 1


@main.command()
@click.option(
    "--input",
    "path",
    type=click_pathlib.Path(exists=True, dir_okay=False),
    required=True,
)
@click.option("--alpha", is_flag=True, help="Also compute the stability number.")
@output_options(OutputFormat.TEXT, OutputFormat.JSON)
def theta(path: pathlib.Path, alpha: bool, json_: bool, format_: typing.Optional[str]) -> int:
    """Reduced theta-prime of a graph file with a vertex-transitive group."""
    config = build_config(json_, format_, float_=True)
    doc = load_graph_document(path)
    graph = FiniteGraph.from_pairs(doc.vertices, doc.edges)
    group = PermGroup(doc.vertices, tuple(tuple(g) for g in doc.generators))
    value = theta_prime_reduced(graph, group)
    stability = stable_set_bruteforce(graph) if alpha else None
    if config.format == OutputFormat.JSON:
        emit(render_json({"vertices": doc.vertices, "theta": value, "alpha": stability}))
    else:
        emit(render_text("theta", theta=value, alpha=stability))
    return 0


def run(argv: typing.Optional[typing.Sequence[str]] = None) -> int:
    try:
        rv = main.main(
            args=list(argv) if argv is not None else None,
            prog_name="theta-bounds",
            standalone_mode=False,
        )
    except click.ClickException as e:
        # usage errors carry exit code 2, the rest 1
        e.show()
        return e.exit_code
    except click.Abort:
        click.echo("Aborted!", err=True)
        return 1
    except (ThetaBoundsError, InvalidDocumentError, OSError) as e:
        click.echo(f"error: {e}", err=True)
        return 1
    return rv if isinstance(rv, int) else 0


def console_main() -> None:
    sys.exit(run())
