"""
cellembed - command-line surface.

Exit status: 0 on success or a true answer, 1 on a false answer or a failed
verification, 2 on usage errors and guard overruns.
"""
from __future__ import annotations

import functools
import json
import logging
import sys
from collections.abc import Callable

import click

from . import __version__
from .cells import CellKind, keyed_partition
from .config import ENV_GUARDS, Config
from .embed import embed as run_embedding
from .embed import trace_from_json, trace_to_json, verify_trace
from .errors import CellEmbedError, GuardExceededError, NotComparableError, PermutationFormatError
from .interval import embedding_report, enumerate_interval
from .klpoly import kl_polynomial, mu as mu_coefficient
from .perm import Base, Permutation, bruhat_leq, format_permutation, last_positions, parse
from .selftest import run_selftest
from .tableau import rsk as rsk_pair

logger = logging.getLogger(__name__)

LOG_LEVELS = {0: logging.WARNING, 1: logging.INFO}


class InputError(click.ClickException):
    """Exit status 2 for rejected input and tripped guards."""
    exit_code = 2


class PermutationType(click.ParamType):
    """Parses a permutation in the base chosen on the command group."""
    name = "permutation"

    def convert(self, value, param, ctx):
        if isinstance(value, Permutation):
            return value
        config = ctx.find_object(Config) if ctx is not None else None
        base = config.base if config is not None else Base.ONE
        try:
            return parse(value, base)
        except PermutationFormatError as exc:
            self.fail(str(exc), param, ctx)


PERMUTATION = PermutationType()

json_option = click.option("--json", "as_json", is_flag=True, help="Structured output on stdout.")


def handle_errors(command: Callable) -> Callable:
    """Map library errors onto the exit-status contract."""
    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except NotComparableError as exc:
            click.echo(f"not comparable: {exc}", err=True)
            click.get_current_context().exit(1)
        except GuardExceededError as exc:
            raise InputError(str(exc)) from None
        except CellEmbedError as exc:
            raise InputError(f"{type(exc).__name__}: {exc}") from None
    return wrapper


def _config() -> Config:
    return click.get_current_context().find_object(Config)


def _fmt(w: Permutation) -> str:
    return format_permutation(w, _config().base)


def _emit(payload: dict, as_json: bool) -> bool:
    """Print ``payload`` as JSON when asked to; True if it did."""
    if as_json or _config().output == "json":
        click.echo(json.dumps(payload, indent=2))
        return True
    return False


def _configure_logging(verbose: int):
    logging.basicConfig(
        level=LOG_LEVELS.get(verbose, logging.DEBUG),
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )
    logging.getLogger("cellembed").setLevel(LOG_LEVELS.get(verbose, logging.DEBUG))


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
@click.version_option(__version__, prog_name="cellembed")
@click.option("--base", type=click.Choice([b.value for b in Base]), default=Base.ONE.value, show_default=True,
              help="Letters start at 1 or at 0, for input and output alike.")
@click.option("--json", "as_json", is_flag=True, help="Structured output for every command.")
@click.option("-v", "--verbose", count=True, help="-v for progress, -vv for every step.")
@click.option("--max-interval", type=int, envvar=ENV_GUARDS["interval_max"], help="Largest interval to enumerate.")
@click.option("--max-iso", type=int, envvar=ENV_GUARDS["iso_max"], help="Largest interval for the isomorphism search.")
@click.option("--max-ideal", type=int, envvar=ENV_GUARDS["ideal_max"], help="Largest order ideal for KL polynomials.")
@click.pass_context
def main(ctx, base, as_json, verbose, max_interval, max_iso, max_ideal):
    """Right-cell embeddings of Bruhat intervals in symmetric groups."""
    _configure_logging(verbose)
    try:
        ctx.obj = Config.from_env(
            base=Base(base),
            output="json" if as_json else "text",
            interval_max=max_interval,
            iso_max=max_iso,
            ideal_max=max_ideal,
        )
    except CellEmbedError as exc:
        raise click.UsageError(str(exc)) from None
    logger.debug("config: %s", ctx.obj)


@main.command()
@click.argument("w", type=PERMUTATION)
@json_option
@handle_errors
def rsk(w, as_json):
    """P and Q symbols of W (column insertion of w(n), ..., w(1))."""
    pair = rsk_pair(w)
    offset = _config().base.offset
    shift = lambda rows: [[entry - 1 + offset for entry in row] for row in rows]
    if _emit({"w": _fmt(w), "P": shift(pair.P.rows), "Q": shift(pair.Q.rows), "shape": list(pair.shape)}, as_json):
        return
    click.echo(f"P = {pair.P.slash(offset)}")
    click.echo(pair.P.render(offset))
    click.echo(f"Q = {pair.Q.slash(offset)}")
    click.echo(pair.Q.render(offset))


@main.command()
@click.argument("x", type=PERMUTATION)
@click.argument("y", type=PERMUTATION)
@click.option("--trace", "trace_path", type=click.Path(dir_okay=False, writable=True),
              help="Write the JSON trace to this file.")
@click.option("--full", is_flag=True, help="Also compare [x,y] and [v,w] as posets.")
@json_option
@handle_errors
def embed(x, y, trace_path, full, as_json):
    """Embed [X,Y] into an interval [v,w] with P(v) = P(w)."""
    config = _config()
    trace = run_embedding(x, y)
    report = verify_trace(trace, config, full=full)
    payload = trace_to_json(trace, config.base, report.checks)
    if trace_path:
        with open(trace_path, "w") as handle:
            json.dump(payload, handle, indent=2)
        logger.info("trace written to %s", trace_path)
    if not _emit(payload, as_json):
        for step in trace.steps:
            click.echo(f"step {step.index + 1}: k={step.k} t={step.t} n={step.n_in}->{step.n_out}")
        click.echo(f"v = {_fmt(trace.v)}")
        click.echo(f"w = {_fmt(trace.w)}")
        click.echo(f"N = {trace.N}")
        for name, message in report.failures.items():
            click.echo(f"FAILED {name}: {message}", err=True)
    if not report.passed:
        click.get_current_context().exit(1)


@main.command("verify-trace")
@click.argument("path", type=click.Path(exists=True, dir_okay=False))
@click.option("--full", is_flag=True, help="Also compare the intervals as posets.")
@json_option
@handle_errors
def verify_trace_command(path, full, as_json):
    """Re-run every check on a stored JSON trace."""
    try:
        with open(path) as handle:
            data = json.load(handle)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not JSON: {exc}") from None
    trace, _ = trace_from_json(data)
    report = verify_trace(trace, _config(), full=full)
    stored = data.get("checks", {})
    drift = sorted(name for name, value in stored.items() if name in report.checks and report.checks[name] != value)
    payload = {"checks": report.checks, "failures": report.failures, "skipped": report.skipped, "drift": drift}
    if not _emit(payload, as_json):
        for name, value in report.checks.items():
            click.echo(f"{name:<22} {'ok' if value else 'FAILED'}")
        for name, reason in report.skipped.items():
            click.echo(f"{name:<22} skipped ({reason})")
        for name in drift:
            click.echo(f"stored result for {name} differs", err=True)
    if not report.passed or drift:
        click.get_current_context().exit(1)


@main.command("check-embedding")
@click.argument("x", type=PERMUTATION)
@click.argument("y", type=PERMUTATION)
@click.argument("v", type=PERMUTATION)
@click.argument("w", type=PERMUTATION)
@click.option("--positions", help="Comma separated 1-based positions; default the last n.")
@click.option("--full", is_flag=True, help="Decide the poset clause by the isomorphism search.")
@json_option
@handle_errors
def check_embedding(x, y, v, w, positions, full, as_json):
    """Report each clause of '[X,Y] embeds into [V,W]'."""
    config = _config()
    if positions:
        try:
            phi = [int(p) for p in positions.replace(" ", "").split(",") if p]
        except ValueError:
            raise click.BadParameter(f"not a list of integers: {positions}", param_hint="--positions") from None
    else:
        phi = list(last_positions(v.n, x.n))
    report = embedding_report(
        x, y, v, w, phi, full=full, interval_max=config.interval_max, iso_max=config.iso_max
    )
    if not _emit({"positions": phi, "clauses": report, "embeds": all(report.values())}, as_json):
        for clause, value in report.items():
            click.echo(f"{clause:<18} {'pass' if value else 'FAIL'}")
    if not all(report.values()):
        click.get_current_context().exit(1)


@main.command()
@click.argument("x", type=PERMUTATION)
@click.argument("y", type=PERMUTATION)
@json_option
@handle_errors
def bruhat(x, y, as_json):
    """Whether X <= Y in Bruhat order."""
    answer = bruhat_leq(x, y)
    if not _emit({"x": _fmt(x), "y": _fmt(y), "leq": answer, "length_x": x.length, "length_y": y.length}, as_json):
        click.echo("true" if answer else "false")
    if not answer:
        click.get_current_context().exit(1)


@main.command()
@click.argument("x", type=PERMUTATION)
@click.argument("y", type=PERMUTATION)
@click.option("--list", "list_elements", is_flag=True, help="Print every element, by rank.")
@click.option("--max-size", type=int, help="Override the interval guard for this call.")
@click.option("--downward", is_flag=True, help="Walk down from Y instead of up from X.")
@json_option
@handle_errors
def interval(x, y, list_elements, max_size, downward, as_json):
    """Size and rank vector of the Bruhat interval [X,Y]."""
    found = enumerate_interval(x, y, max_size or _config().interval_max, downward=downward)
    payload = {"size": found.size, "ranks": list(found.rank_sizes()), "covers": len(found.cover_edges)}
    if list_elements:
        payload["elements"] = [_fmt(z) for z in found.elements]
    if _emit(payload, as_json):
        return
    click.echo(f"size = {found.size}")
    click.echo(f"ranks = {' '.join(map(str, found.rank_sizes()))}")
    if list_elements:
        for rank in range(len(found.rank_sizes())):
            click.echo(f"{rank}: " + " ".join(_fmt(z) for z in found.elements if found.rank_of[z] == rank))


@main.command()
@click.argument("n", type=click.IntRange(min=1))
@click.option("--kind", type=click.Choice([k.value for k in CellKind]), default=CellKind.RIGHT.value, show_default=True)
@json_option
@handle_errors
def cells(n, kind, as_json):
    """Cells of S_N, one block per line."""
    offset = _config().base.offset
    partition = keyed_partition(n, kind, offset=offset)
    if _emit({symbol: [_fmt(w) for w in cell] for symbol, cell in partition.items()}, as_json):
        return
    for symbol, cell in partition.items():
        click.echo(f"{symbol}: " + " ".join(_fmt(w) for w in cell))


@main.command()
@click.argument("x", type=PERMUTATION)
@click.argument("y", type=PERMUTATION)
@click.option("--max-ideal", type=int, help="Override the order ideal guard for this call.")
@json_option
@handle_errors
def kl(x, y, max_ideal, as_json):
    """Kazhdan-Lusztig polynomial P_{X,Y}(q)."""
    polynomial = kl_polynomial(x, y, max_ideal=max_ideal or _config().ideal_max)
    if not _emit({"x": _fmt(x), "y": _fmt(y), "coefficients": list(polynomial.coefficients)}, as_json):
        click.echo(str(polynomial))


@main.command()
@click.argument("x", type=PERMUTATION)
@click.argument("y", type=PERMUTATION)
@click.option("--max-ideal", type=int, help="Override the order ideal guard for this call.")
@json_option
@handle_errors
def mu(x, y, max_ideal, as_json):
    """The mu-coefficient of X and Y."""
    value = int(mu_coefficient(x, y, max_ideal=max_ideal or _config().ideal_max))
    if not _emit({"x": _fmt(x), "y": _fmt(y), "mu": value}, as_json):
        click.echo(value)


@main.command()
@click.option("--stretch", is_flag=True, help="Also attempt mu = 4 on the S_10 pair (slow).")
@click.option("--tamper", is_flag=True, hidden=True)
@json_option
@handle_errors
def selftest(stretch, tamper, as_json):
    """Golden cases and small exhaustive sweeps."""
    results = run_selftest(_config().replace(stretch=stretch), tamper=tamper)
    if not _emit({"checks": [result.to_json() for result in results]}, as_json):
        for result in results:
            line = f"{result.name:<22} {'ok' if result.passed else 'FAILED'}"
            click.echo(line + (f"  {result.detail}" if result.detail else ""))
    if not all(result.passed for result in results):
        click.get_current_context().exit(1)


def run(argv: list[str] | None = None) -> int:
    """Run the command line and return its exit status."""
    try:
        main.main(args=argv, prog_name="cellembed", standalone_mode=True)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else (0 if exc.code is None else 1)
    return 0
