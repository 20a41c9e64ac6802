"""
Command Line - argparse entry point

Every subcommand resolves its use case from the DI container, writes the
report through the report writer and returns the report's exit code.
Input errors exit with 2 before any report exists.
"""
import argparse
import os
from typing import List, Optional

from di.container import DIContainer, get_container
from application.use_cases import DegreeBounds
from domain.entities import Budgets, CodeJob
from domain.entities.field import get_field
from domain.entities.reports import STATUS_EXIT_CODES, ERROR, REFUSED, Report
from domain.errors import BudgetExceededError, DoubleSkewError
from domain.interfaces import FORMATS
from utils.config import (
    FACTORIZATIONS_FILE,
    LOG_FILE,
    LOG_JSON,
    LOG_LEVEL,
    TABLE_MANIFEST,
    ensure_directories,
)
from utils.logging_config import log_error, logger, setup_logging


def _add_common(parser: argparse.ArgumentParser):
    parser.add_argument('--budget-ops', type=int, default=None,
                        help='Codeword enumeration budget for distance computations')
    parser.add_argument('--budget-secs', type=float, default=None,
                        help='Wall-clock budget in seconds for distance computations')
    parser.add_argument('--long-run', action='store_true',
                        help='Lift distance budgets to the long-run limits')
    parser.add_argument('--format', choices=FORMATS, default='text',
                        help='Report format (default: text)')
    parser.add_argument('--seed', type=int, default=None,
                        help='Random seed for search draws')
    parser.add_argument('--out', type=str, default=None,
                        help='Write the report to this file instead of stdout')


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="double-skew",
        description="Double skew cyclic codes over F_q + vF_q: parameters, duals, construction and table runs",
    )
    parser.add_argument('--log-level', type=str, default=LOG_LEVEL,
                        help=f'Logging level (default: {LOG_LEVEL})')
    sub = parser.add_subparsers(dest="command", required=True)

    for name, help_text in (
        ("params", "Validate a code and report [n, k, d]"),
        ("dual", "Compute dual generators and duality checks"),
        ("construct", "Evaluate the G' construction"),
    ):
        cmd = sub.add_parser(name, help=help_text)
        cmd.add_argument('--config', type=str, required=True, help='Job config (JSON)')
        cmd.add_argument('--matrix-dir', type=str, default=None,
                         help='Directory receiving the matrix in fixture format')
        _add_common(cmd)

    table = sub.add_parser("table", help="Reproduce the optimal-code table manifest")
    table.add_argument('--config', type=str, default=TABLE_MANIFEST,
                       help='Table manifest (default: shipped manifest)')
    _add_common(table)

    fixture = sub.add_parser("verify-fixture", help="Rank and distance of a transcribed matrix")
    fixture.add_argument('--config', type=str, required=True, help='Matrix fixture file')
    _add_common(fixture)

    factorizations = sub.add_parser("factorizations", help="Verify displayed factorizations of x^n - 1")
    factorizations.add_argument('--config', type=str, default=FACTORIZATIONS_FILE,
                                help='Factorization list (default: shipped list)')
    _add_common(factorizations)

    search = sub.add_parser("search", help="Search codes by divisor enumeration")
    search.add_argument('--p', type=int, required=True, help='Field characteristic')
    search.add_argument('--m', type=int, default=1, help='Extension degree (default: 1)')
    search.add_argument('--i', type=int, default=1, help='Frobenius power of the automorphism (default: 1)')
    search.add_argument('--r', type=int, required=True, help='Length of the first block')
    search.add_argument('--s', type=int, required=True, help='Length of the second block')
    search.add_argument('--g-min', type=int, default=1, help='Smallest degree of g components')
    search.add_argument('--g-max', type=int, default=None, help='Largest degree of g components (default: r)')
    search.add_argument('--h-min', type=int, default=1, help='Smallest degree of h components')
    search.add_argument('--h-max', type=int, default=None, help='Largest degree of h components (default: s)')
    search.add_argument('--max-codes', type=int, default=None, help='Candidates to evaluate')
    _add_common(search)
    return parser


def _budgets(args: argparse.Namespace, base: Optional[Budgets] = None) -> Budgets:
    return (base or Budgets()).override(
        ops=args.budget_ops,
        secs=args.budget_secs,
        long_run=args.long_run or None,
        seed=args.seed,
    )


def _overrides_given(args: argparse.Namespace) -> bool:
    return any(v is not None for v in (args.budget_ops, args.budget_secs, args.seed)) or args.long_run


def _matrix_path(args: argparse.Namespace, job: CodeJob, suffix: str) -> Optional[str]:
    if not args.matrix_dir:
        return None
    return os.path.join(args.matrix_dir, f"{job.label}_{suffix}.txt")


def _load_job(container: DIContainer, args: argparse.Namespace) -> CodeJob:
    job = container.job_repo.load_job(args.config)
    return job.with_budgets(_budgets(args, job.budgets))


def _dispatch(container: DIContainer, args: argparse.Namespace) -> Report:
    command = args.command
    if command == "params":
        job = _load_job(container, args)
        return container.compute_parameters.execute(job, _matrix_path(args, job, "generator"))
    if command == "dual":
        job = _load_job(container, args)
        return container.compute_dual.execute(job, _matrix_path(args, job, "parity"))
    if command == "construct":
        job = _load_job(container, args)
        return container.run_construction.execute(job, _matrix_path(args, job, "construction"))
    if command == "table":
        budgets = _budgets(args) if _overrides_given(args) else None
        return container.reproduce_table.execute(args.config, budgets)
    if command == "verify-fixture":
        return container.verify_fixture.execute(args.config, _budgets(args))
    if command == "factorizations":
        return container.verify_factorizations.execute(args.config)

    spec = get_field(args.p, args.m)
    bounds = DegreeBounds(
        g_min=args.g_min,
        g_max=args.r if args.g_max is None else args.g_max,
        h_min=args.h_min,
        h_max=args.s if args.h_max is None else args.h_max,
    )
    kwargs = {} if args.max_codes is None else {"max_codes": args.max_codes}
    return container.search_codes.execute(spec, args.i, args.r, args.s, bounds,
                                          _budgets(args), **kwargs)


def run(argv: Optional[List[str]] = None, container: Optional[DIContainer] = None) -> int:
    """
    Parse arguments, run one command and write its report.

    Args:
        argv: Argument list (defaults to sys.argv)
        container: Container to resolve use cases from (defaults to the global one)

    Returns:
        Process exit code
    """
    parser = build_parser()
    args = parser.parse_args(argv)

    setup_logging(args.log_level, json_format=LOG_JSON, log_file=LOG_FILE)
    ensure_directories()
    container = container or get_container()

    try:
        report = _dispatch(container, args)
    except BudgetExceededError as e:
        logger.warning(f"{args.command}: {e}", extra={"command": args.command})
        return STATUS_EXIT_CODES[REFUSED]
    except ValueError as e:
        # ParseError, FieldConstructionError and argument range errors
        logger.error(f"{args.command}: {e}", extra={"command": args.command})
        return STATUS_EXIT_CODES[ERROR]
    except DoubleSkewError as e:
        log_error(f"{args.command} failed", e, command=args.command)
        return STATUS_EXIT_CODES[ERROR]

    container.report_writer.write(report, args.format, args.out)
    return report.exit_code
