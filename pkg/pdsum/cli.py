"""
Command-line interface for pdsum.

Usage:
    pd count 10                      # PD(0..10) from the eta quotient
    pd count 35 --oracle             # cross-check against enumeration
    pd verify thm1.3 --order 100     # verify one identity
    pd verify --all --jobs 4         # verify the whole registry
    pd dissect 3 2 --order 20        # sum PD(3n+2) q^n
    pd rank 5 --format csv           # designated partitions, pairs and pd-ranks
    pd exponents 30                  # exponents of sum PD(3n) q^n
    pd series "(6:6)^1*(1:1)^-1"     # expand an eta quotient
    pd congruence 3 2 3 --order 999  # 3 | PD(3n+2)
"""

import functools
import logging
import sys
from typing import Any, Callable, Dict, List, Optional, Sequence

import click
import colorama

from pdsum import __app_name__, __version__
from pdsum.bijections import CSV_HEADER, rank_counts, rank_table
from pdsum.config import LOG_LEVELS, Settings
from pdsum.exceptions import (
    ConfigError,
    EnumerationCapError,
    EtaSpecError,
    PartitionError,
    SeriesError,
    UnknownIdentityError,
)
from pdsum.identities import (
    PD_SPEC,
    congruence_check,
    exponent_report,
    get_identity,
    list_identities,
    pd_series,
    verify_many,
)
from pdsum.partitions import pd_counts, pd_count_by_enumeration, pd_pair_counts
from pdsum.report import OutputFormat, Reporter, text_table
from pdsum.series import EtaQuotientSpec, Series, dissect, format_series

logger = logging.getLogger(__name__)

__all__ = [
    "cli",
    "main",
]

USAGE_ERRORS = (UnknownIdentityError, EnumerationCapError, EtaSpecError, SeriesError, PartitionError, ConfigError)


def usage_errors(func: Callable) -> Callable:
    """Report bad user input as a click usage error (exit code 2)"""
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except USAGE_ERRORS as exc:
            raise click.UsageError(str(exc)) from exc
    return wrapper


def common_options(func: Callable) -> Callable:
    """--format and --log-level, shared by every command"""
    func = click.option(
        "--log-level", type=click.Choice(LOG_LEVELS, case_sensitive=False), default=None,
        help="Logging level for stderr (default: PD_LOG_LEVEL or WARNING)",
    )(func)
    func = click.option(
        "--format", "fmt", type=click.Choice(OutputFormat.choices()), default=OutputFormat.HUMAN.value,
        show_default=True, help="Output format",
    )(func)
    return func


def _setup(log_level: Optional[str], fmt: str) -> Reporter:
    settings: Settings = click.get_current_context().obj
    level = (log_level or settings.log_level).upper()
    logging.basicConfig(
        stream=sys.stderr,
        level=getattr(logging, level),
        format="%(asctime)s %(name)s %(levelname)s %(message)s",
        force=True,
    )
    return Reporter(OutputFormat(fmt))


def _settings() -> Settings:
    return click.get_current_context().obj


def _emit(text: str):
    click.echo(text, nl=False)


def _fail():
    click.get_current_context().exit(1)


def _check_cap(weight: int, cap: Optional[int]):
    limit = _settings().enum_cap if cap is None else cap
    if weight > limit:
        logger.warning("Refusing enumeration of weight %d (cap %d)", weight, limit)
        raise EnumerationCapError(weight, limit)


def _source(spec_text: Optional[str]) -> EtaQuotientSpec:
    return EtaQuotientSpec.parse(spec_text) if spec_text else PD_SPEC


@click.group()
@click.version_option(version=__version__, prog_name=__app_name__)
@click.pass_context
def cli(ctx: click.Context):
    """
    pdsum - partitions with designated summands.

    Exact q-series identities, congruences, bijections and pd-ranks for PD(n).

    Examples:

        pd count 10

        pd verify --all

        pd rank 5 --format csv
    """
    try:
        ctx.obj = Settings.from_env()
    except ConfigError as exc:
        raise click.UsageError(str(exc)) from exc


@cli.command()
@click.argument("n_max", type=click.IntRange(min=0))
@click.option("--oracle", is_flag=True, help="Cross-check against partition enumeration")
@click.option("--cap", type=click.IntRange(min=0), default=None, help="Largest weight enumerated with --oracle")
@common_options
@usage_errors
def count(n_max: int, oracle: bool, cap: Optional[int], fmt: str, log_level: Optional[str]):
    """
    Print PD(0..N_MAX) from the eta quotient.

    With --oracle the values are also counted as products of multiplicities
    over enumerated partitions and as pairs (alpha, beta); the command exits
    with status 1 if any route disagrees.
    """
    reporter = _setup(log_level, fmt)
    values = list(pd_series(n_max).coeffs)
    oracle_result: Optional[Dict[str, Any]] = None
    if oracle:
        _check_cap(n_max, cap)
        by_multiplicity = pd_counts(n_max)
        by_pairs = pd_pair_counts(n_max)
        mismatch = None
        for n in range(n_max + 1):
            if not values[n] == by_multiplicity[n] == by_pairs[n] == pd_count_by_enumeration(n):
                mismatch = n
                logger.warning("PD(%d) disagrees between routes", n)
                break
        oracle_result = {
            'agree': mismatch is None,
            'first_mismatch': mismatch,
            'routes': "eta quotient, multiplicity products, enumeration, pairs",
        }

    rows = [(n, value) for n, value in enumerate(values)]
    payload = {
        'n_max': n_max,
        'values': [{'n': n, 'pd': value} for n, value in rows],
        'oracle': oracle_result,
    }
    context = {'n_max': n_max, 'table': text_table(("n", "PD(n)"), rows), 'oracle': oracle_result}
    _emit(reporter.render("count", payload, ("n", "pd"), rows, context=context))
    if oracle_result and not oracle_result['agree']:
        _fail()


@cli.command()
@click.argument("names", nargs=-1)
@click.option("--all", "run_all", is_flag=True, help="Verify every registered identity")
@click.option("--list", "list_only", is_flag=True, help="List registered identities and exit")
@click.option("--order", type=click.IntRange(min=0), default=None, help="Truncation order (default per identity)")
@click.option("--jobs", type=click.IntRange(min=1), default=None, help="Worker processes (default: PD_JOBS)")
@click.option("--timing", is_flag=True, help="Record elapsed time per identity")
@common_options
@usage_errors
def verify(names: Sequence[str], run_all: bool, list_only: bool, order: Optional[int], jobs: Optional[int],
           timing: bool, fmt: str, log_level: Optional[str]):
    """
    Verify identities coefficient-wise.

    Exits with status 1 if any requested identity fails.
    """
    reporter = _setup(log_level, fmt)
    settings = _settings()

    if list_only:
        cases = list_identities()
        entries = [
            {
                'name': case.name,
                'description': case.description,
                'forms': [form.label for form in case.forms],
                'default_order': case.resolve_order(settings),
            }
            for case in cases
        ]
        rows = [(e['name'], e['default_order'], " ".join(e['forms']), e['description']) for e in entries]
        context = {
            'items': [
                {'name': e['name'], 'description': e['description'], 'forms': ", ".join(e['forms']),
                 'order': e['default_order']}
                for e in entries
            ],
        }
        _emit(reporter.render("identities", {'identities': entries}, ("name", "default_order", "forms", "description"),
                              rows, template="identities.txt.j2", context=context))
        return

    if run_all:
        names = [case.name for case in list_identities()]
    if not names:
        raise click.UsageError("name at least one identity, or pass --all or --list")
    for name in names:
        get_identity(name)

    reports = verify_many(list(names), order=order, jobs=jobs or settings.jobs, timing=timing, settings=settings)
    passed = all(report.passed for report in reports)

    width = max(len(report.name) for report in reports)
    items = []
    rows = []
    for report in reports:
        mismatch = report.first_mismatch
        items.append({
            'name': report.name.ljust(width),
            'order': report.order,
            'passed': report.passed,
            'elapsed': f"  {report.elapsed_ms} ms" if report.elapsed_ms is not None else "",
            'mismatch': (f"form {mismatch['form']} differs at q^{mismatch['n']}: {mismatch['lhs']} vs {mismatch['rhs']}"
                         if mismatch else None),
        })
        rows.append((
            report.name, report.order, report.status.value,
            mismatch['form'] if mismatch else None,
            mismatch['n'] if mismatch else None,
            report.elapsed_ms,
        ))
    payload = {'passed': passed, 'reports': [report.to_dict() for report in reports]}
    context = {'items': items, 'passed_count': sum(1 for r in reports if r.passed), 'total': len(reports)}
    header = ("name", "order", "status", "mismatch_form", "mismatch_n", "elapsed_ms")
    _emit(reporter.render("verify", payload, header, rows, context=context))
    if not passed:
        _fail()


@cli.command(name="dissect")
@click.argument("modulus", type=click.IntRange(min=1))
@click.argument("residue", type=click.IntRange(min=0))
@click.option("--order", type=click.IntRange(min=0), default=20, show_default=True,
              help="Order of the extracted component")
@click.option("--spec", "spec_text", default=None, help="Eta quotient to dissect (default: the PD series)")
@common_options
@usage_errors
def dissect_cmd(modulus: int, residue: int, order: int, spec_text: Optional[str], fmt: str, log_level: Optional[str]):
    """Print component RESIDUE of the MODULUS-dissection: coefficient n is c(MODULUS*n + RESIDUE)."""
    reporter = _setup(log_level, fmt)
    if residue >= modulus:
        raise SeriesError(f"residue {residue} is outside 0..{modulus - 1}")
    spec = _source(spec_text)
    component = dissect(spec.build(modulus * order + residue), modulus, residue)
    rows = list(enumerate(component.coeffs))
    payload = {
        'source': str(spec),
        'modulus': modulus,
        'residue': residue,
        'order': component.order,
        'coefficients': list(component.coeffs),
    }
    context = dict(payload, table=text_table(("n", "coefficient"), rows))
    _emit(reporter.render("dissect", payload, ("n", "coefficient"), rows, context=context))


@cli.command()
@click.argument("n", type=click.IntRange(min=0))
@click.option("--cap", type=click.IntRange(min=0), default=None, help="Largest weight accepted (default: PD_ENUM_CAP)")
@common_options
@usage_errors
def rank(n: int, cap: Optional[int], fmt: str, log_level: Optional[str]):
    """
    Tabulate the designated partitions of N with (alpha, beta) and pd-rank.

    CSV output holds the table only; JSON and human output add the rank
    distribution and the class counts mod 3.
    """
    reporter = _setup(log_level, fmt)
    _check_cap(n, cap)
    records = rank_table(n)
    counts = rank_counts(n, records)
    rows = [record.to_row() for record in records]
    payload = {'n': n, 'rows': [record.to_dict() for record in records], 'counts': counts.to_dict()}
    context = {
        'n': n,
        'table': text_table(("lambda", "(alpha, beta)", "rank", "mod 3"),
                            [(str(r.lam), str(r.pair), r.rank, r.rank_mod3) for r in records]),
        'distribution': ", ".join(f"{r}: {c}" for r, c in counts.by_rank),
        'mod3': counts.mod3,
        'total': counts.total,
        'equal': counts.is_equidistributed(),
    }
    _emit(reporter.render("rank", payload, CSV_HEADER, rows, context=context))


def _expected_text(n: int, expected: Optional[int]) -> str:
    if n % 2:
        return f"{expected} (n = {n % 6} mod 6)"
    return f"{expected} (F at {n // 2})"


@cli.command()
@click.argument("n_max", type=click.IntRange(min=1))
@common_options
@usage_errors
def exponents(n_max: int, fmt: str, log_level: Optional[str]):
    """
    Extract e(1..N_MAX) with sum PD(3n) q^n = prod (1 - q^n)^(-e(n)).

    Odd n are checked against 5, 2, 5 for n = 1, 3, 5 mod 6 and even n against
    the exponents of F; exits with status 1 if any check fails.
    """
    reporter = _setup(log_level, fmt)
    report = exponent_report(n_max)
    rows = [(row.n, row.exponent, row.expected, row.ok) for row in report.rows]
    context = {
        'order': report.order,
        'table': text_table(
            ("n", "e(n)", "expected", "ok"),
            [(row.n, row.exponent, _expected_text(row.n, row.expected), "yes" if row.ok else "NO") for row in report.rows],
        ),
        'reconstruction_ok': report.reconstruction_ok,
        'passed': report.passed,
    }
    _emit(reporter.render("exponents", report.to_dict(), ("n", "exponent", "expected", "ok"), rows, context=context))
    if not report.passed:
        _fail()


@cli.command()
@click.argument("spec_text", metavar="SPEC")
@click.option("--order", type=click.IntRange(min=0), default=20, show_default=True, help="Truncation order")
@common_options
@usage_errors
def series(spec_text: str, order: int, fmt: str, log_level: Optional[str]):
    """Expand an eta quotient written as (a:b)^e*(a:b)^e*..."""
    reporter = _setup(log_level, fmt)
    spec = EtaQuotientSpec.parse(spec_text)
    expansion: Series = spec.build(order)
    rows = list(enumerate(expansion.coeffs))
    payload = {'spec': str(spec), 'order': order, 'coefficients': list(expansion.coeffs)}
    context = {'spec': str(spec), 'order': order, 'text': format_series(expansion)}
    _emit(reporter.render("series", payload, ("n", "coefficient"), rows, context=context))


@cli.command()
@click.argument("modulus", type=click.IntRange(min=1))
@click.argument("residue", type=click.IntRange(min=0))
@click.argument("divisor", type=click.IntRange(min=2))
@click.option("--order", type=click.IntRange(min=0), default=None, help="Truncation order (default: PD_ORDER)")
@click.option("--spec", "spec_text", default=None, help="Eta quotient to test (default: the PD series)")
@common_options
@usage_errors
def congruence(modulus: int, residue: int, divisor: int, order: Optional[int], spec_text: Optional[str],
               fmt: str, log_level: Optional[str]):
    """Check that DIVISOR divides every coefficient of q^(MODULUS*n + RESIDUE); exit 1 on a violation."""
    reporter = _setup(log_level, fmt)
    order = _settings().order if order is None else order
    spec = _source(spec_text)
    report = congruence_check(spec.build(order), modulus, residue, divisor)
    payload = dict(report.to_dict(), source=str(spec))
    rows = [(report.modulus, report.residue, report.divisor, report.order, report.checked,
             report.passed, report.first_violation, report.value)]
    header = ("modulus", "residue", "divisor", "order", "checked", "passed", "first_violation", "value")
    _emit(reporter.render("congruence", payload, header, rows))
    if not report.passed:
        _fail()


def main(argv: Optional[List[str]] = None):
    """Console entry point"""
    colorama.just_fix_windows_console()
    cli.main(args=argv, prog_name="pd")


if __name__ == "__main__":
    main()
