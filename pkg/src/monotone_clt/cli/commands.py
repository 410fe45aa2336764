"""
Monotone CLT command-line interface.

Subcommands:
- count: number of peakless pair maps, optionally checked by brute force
- enumerate: list peakless pair maps by filtering or painting
- paint: run the painting procedure for one rank, or rank a given map
- moment: reduce a mixed moment under monotone independence
- table: finite-N CLT moments against their limits
- classes: pair-map counts and limit moments of the four independence classes
- arcsine: arcsine-law moments by quadrature against the closed form
- verify: run the verification suite

Exit codes: 0 success, 1 engine failure or failed check, 2 bad arguments or input files.
"""

import argparse
import logging
import os
import sys
from fractions import Fraction
from pathlib import Path
from typing import Callable, List, Mapping, Optional, TextIO

from ..arcsine.quadrature import arcsine_moment_closed, arcsine_moment_quadrature
from ..combinatorics.classes import class_pair_counts
from ..combinatorics.counting import count_peakless
from ..combinatorics.enumeration import enumerate_peakless
from ..combinatorics.models import ColorMap, EnumerationMethod, IndependenceClass, PaintRank
from ..combinatorics.painting import paint_rank, paint_unrank
from ..config import OUTPUT_FORMATS, RunConfig, resolve_config
from ..exceptions import (ConfigurationError, ConvergenceError, InsufficientMomentsError,
                          InvalidInputError, MomentFileError, ResourceLimitError)
from ..moment_engine.clt import normalized_moment, pair_partition_normalized_sum
from ..moment_engine.limits import limit_moment
from ..moment_engine.models import MomentSequence
from ..moment_engine.moment_file import load_moment_file
from ..moment_engine.reduction import reduce_monotone
from ..verification import run_verification
from .rendering import ConvergenceRow, format_number, render_convergence, render_csv, render_json

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2


def setup_logging(verbose: bool = False) -> logging.Logger:
    """Set up logging configuration; records go to stderr."""
    level = logging.DEBUG if verbose else logging.WARNING
    logging.basicConfig(
        level=level,
        format='%(asctime)s - %(levelname)s - %(message)s',
        datefmt='%Y-%m-%d %H:%M:%S',
        stream=sys.stderr,
    )
    logging.getLogger().setLevel(level)
    return logging.getLogger(__name__)


def _moments_for(config: RunConfig, order: int) -> MomentSequence:
    """The configured moment file, or Bernoulli moments up to `order`."""
    if config.moment_file:
        return load_moment_file(config.moment_file)
    return MomentSequence.bernoulli(max(order, 2))


def count_command(args, config: RunConfig, out: TextIO) -> int:
    """Handle the count command."""
    count = count_peakless(args.pairs, args.colors)
    out.write(f"{count}\n")
    if not args.check:
        return EXIT_OK

    brute_force = len(enumerate_peakless(args.pairs, args.colors, EnumerationMethod.FILTER,
                                         cap=config.cap))
    verdict = "match" if brute_force == count else "mismatch"
    out.write(f"brute-force {brute_force} {verdict}\n")
    if brute_force != count:
        logger.error(f"Count mismatch for m={args.pairs}, N={args.colors}: "
                     f"formula {count}, brute force {brute_force}")
        return EXIT_FAILURE
    return EXIT_OK


def enumerate_command(args, config: RunConfig, out: TextIO) -> int:
    """Handle the enumerate command."""
    method = EnumerationMethod(args.method)
    maps = enumerate_peakless(args.pairs, args.colors, method, cap=config.cap)
    if config.output_format == "json":
        out.write(render_json({
            "pairs": args.pairs,
            "colors": args.colors,
            "method": method.value,
            "count": len(maps),
            "maps": [list(f.labels) for f in maps],
        }))
    else:
        out.write(render_csv(["labels"], (f.labels for f in maps)))
    return EXIT_OK


def paint_command(args, config: RunConfig, out: TextIO) -> int:
    """Handle the paint command: unrank by default, rank when --labels is given."""
    if args.labels:
        rank = paint_rank(ColorMap(tuple(args.labels), args.colors))
        out.write(f"subset {rank.subset_index} digits {' '.join(str(d) for d in rank.digits)}\n")
        return EXIT_OK

    if args.pairs is None or args.subset is None or args.digits is None:
        raise InvalidInputError("paint needs --pairs, --subset and --digits, or --labels")
    f = paint_unrank(args.pairs, args.colors, PaintRank(args.subset, tuple(args.digits)))
    out.write(f"{f}\n")
    return EXIT_OK


def moment_command(args, config: RunConfig, out: TextIO) -> int:
    """Handle the moment command."""
    max_multiplicity = max((args.word.count(color) for color in set(args.word)), default=0)
    moments = _moments_for(config, max_multiplicity)
    value = reduce_monotone(tuple(args.word), moments)
    out.write(f"{format_number(value, config.rational)}\n")
    return EXIT_OK


def table_rows(orders: List[int], colors: List[int], config: RunConfig) -> List[ConvergenceRow]:
    """One row per (N, m), N outer; pair sums are 0 when no pair map exists."""
    moments = _moments_for(config, max(orders))
    rows = []
    for num_variables in colors:
        for m in orders:
            normalized = normalized_moment(num_variables, m, moments, cap=config.cap)
            if m == 0:
                pair_sum = Fraction(1)
            elif m % 2 or num_variables < m // 2:
                pair_sum = Fraction(0)
            else:
                pair_sum = pair_partition_normalized_sum(num_variables, m, moments, cap=config.cap)
            limit = limit_moment(m, IndependenceClass.MONOTONE)
            rows.append(ConvergenceRow.build(num_variables, m, normalized, pair_sum, limit,
                                             config.rational))
            logger.debug(f"N={num_variables}, m={m}: {rows[-1]}")
    return rows


def table_command(args, config: RunConfig, out: TextIO) -> int:
    """Handle the table command."""
    if any(m < 0 for m in args.order) or any(n < 1 for n in args.colors):
        raise InvalidInputError("Orders must be nonnegative and --colors positive")
    rows = table_rows(args.order, args.colors, config)
    out.write(render_convergence(rows, config.output_format, config.to_dict()))
    return EXIT_OK


def classes_command(args, config: RunConfig, out: TextIO) -> int:
    """Handle the classes command."""
    counts = class_pair_counts(args.pairs, cap=config.cap)
    records = []
    for independence in IndependenceClass:
        limit = limit_moment(2 * args.pairs, independence)
        records.append({
            "class": independence.value,
            "pair_maps": counts[independence],
            "limit": format_number(limit, config.rational),
        })
    if config.output_format == "json":
        out.write(render_json({"pairs": args.pairs, "classes": records}))
    else:
        out.write(render_csv(["class", "pair_maps", "limit"],
                             ([r["class"], r["pair_maps"], r["limit"]] for r in records)))
    return EXIT_OK


def arcsine_command(args, config: RunConfig, out: TextIO) -> int:
    """Handle the arcsine command."""
    spec = config.quadrature
    records = []
    for m in args.order:
        estimate = arcsine_moment_quadrature(m, spec)
        exact = arcsine_moment_closed(m)
        records.append({
            "m": m,
            "quadrature": repr(estimate),
            "exact": format_number(exact, config.rational),
            "abs_error": repr(abs(estimate - float(exact))),
        })
    if config.output_format == "json":
        out.write(render_json({"config": config.to_dict(), "rows": records}))
    else:
        out.write(render_csv(["m", "quadrature", "exact", "abs_error"],
                             ([r["m"], r["quadrature"], r["exact"], r["abs_error"]] for r in records)))
    return EXIT_OK


def verify_command(args, config: RunConfig, out: TextIO) -> int:
    """Handle the verify command."""
    report = run_verification(config)
    out.write(report.get_detailed_report() + "\n")
    if not report.passed:
        logger.error(f"Verification failed: {report.failures[0]}")
        return EXIT_FAILURE
    return EXIT_OK


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be a positive integer, got {text}")
    return value


def _common_options() -> argparse.ArgumentParser:
    """Options every subcommand accepts; None means "not given on the command line"."""
    parser = argparse.ArgumentParser(add_help=False)
    parser.add_argument('--config', type=Path, help='YAML or JSON run configuration')
    parser.add_argument('--verbose', '-v', action='store_true', help='Enable debug logging')
    parser.add_argument('--cap', type=_positive_int, help='Enumeration cap (overrides MCLT_CAP)')
    parser.add_argument('--tolerance', type=float, help='Quadrature tolerance')
    parser.add_argument('--format', dest='output_format', choices=OUTPUT_FORMATS,
                        help='Output format')
    parser.add_argument('--rational', action='store_true', default=None,
                        help='Print every exact value as p/q')
    parser.add_argument('--moments', type=Path, dest='moment_file',
                        help='Moment sequence JSON file (default: Bernoulli moments)')
    return parser


def create_parser() -> argparse.ArgumentParser:
    """Create the CLI argument parser."""
    common = _common_options()
    parser = argparse.ArgumentParser(
        prog='mclt',
        description='Exact combinatorics of the monotone central limit theorem',
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  mclt count --pairs 2 --colors 3 --check
  mclt enumerate -m 2 -N 2 --method paint --format json
  mclt moment --word 1 2 1
  mclt table --order 2 4 6 8 --colors 10 40
  mclt verify --cap 100000
        """
    )
    subparsers = parser.add_subparsers(dest='command', metavar='COMMAND')
    subparsers.required = True

    count_parser = subparsers.add_parser('count', parents=[common], help='Count peakless pair maps')
    count_parser.add_argument('--pairs', '-m', type=_positive_int, required=True)
    count_parser.add_argument('--colors', '-N', type=_positive_int, required=True)
    count_parser.add_argument('--check', action='store_true',
                              help='Also count by brute-force filtering')
    count_parser.set_defaults(handler=count_command)

    enumerate_parser = subparsers.add_parser('enumerate', parents=[common],
                                             help='List peakless pair maps')
    enumerate_parser.add_argument('--pairs', '-m', type=_positive_int, required=True)
    enumerate_parser.add_argument('--colors', '-N', type=_positive_int, required=True)
    enumerate_parser.add_argument('--method', choices=[m.value for m in EnumerationMethod],
                                  default=EnumerationMethod.FILTER.value)
    enumerate_parser.set_defaults(handler=enumerate_command)

    paint_parser = subparsers.add_parser('paint', parents=[common],
                                         help='Paint one rank, or rank a map with --labels')
    paint_parser.add_argument('--pairs', '-m', type=_positive_int)
    paint_parser.add_argument('--colors', '-N', type=_positive_int, required=True)
    paint_parser.add_argument('--subset', type=int, help='Color-subset index')
    paint_parser.add_argument('--digits', type=int, nargs='+', help='Pair choices, highest color first')
    paint_parser.add_argument('--labels', type=int, nargs='+', help='Peakless map to rank')
    paint_parser.set_defaults(handler=paint_command)

    moment_parser = subparsers.add_parser('moment', parents=[common],
                                          help='Reduce a mixed moment')
    moment_parser.add_argument('--word', type=_positive_int, nargs='*', default=[],
                               help='Variable indices, left to right')
    moment_parser.set_defaults(handler=moment_command)

    table_parser = subparsers.add_parser('table', parents=[common],
                                         help='CLT convergence table')
    table_parser.add_argument('--order', type=int, nargs='+', required=True)
    table_parser.add_argument('--colors', '-N', type=int, nargs='+', required=True)
    table_parser.set_defaults(handler=table_command)

    classes_parser = subparsers.add_parser('classes', parents=[common],
                                           help='Four-class pair counts and limit moments')
    classes_parser.add_argument('--pairs', '-m', type=_positive_int, required=True)
    classes_parser.set_defaults(handler=classes_command)

    arcsine_parser = subparsers.add_parser('arcsine', parents=[common],
                                           help='Arcsine moments by quadrature')
    arcsine_parser.add_argument('--order', type=int, nargs='+', default=list(range(0, 13, 2)))
    arcsine_parser.set_defaults(handler=arcsine_command)

    verify_parser = subparsers.add_parser('verify', parents=[common],
                                          help='Run the verification suite')
    verify_parser.set_defaults(handler=verify_command)

    return parser


def main(argv: Optional[List[str]] = None, environ: Optional[Mapping[str, str]] = None,
         out: Optional[TextIO] = None) -> int:
    """Main entry point; returns the process exit code."""
    parser = create_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_USAGE

    setup_logging(args.verbose)
    out = out or sys.stdout
    environ = os.environ if environ is None else environ
    handler: Callable[..., int] = args.handler

    try:
        config = resolve_config(
            args.config, environ,
            cap=args.cap,
            tolerance=args.tolerance,
            output_format=args.output_format,
            rational=args.rational,
            moment_file=args.moment_file,
        )
        return handler(args, config, out)
    except InvalidInputError as e:
        logger.error(str(e))
        sys.stderr.write(parser.format_usage())
        return EXIT_USAGE
    except (MomentFileError, ConfigurationError) as e:
        logger.error(str(e))
        return EXIT_USAGE
    except (InsufficientMomentsError, ResourceLimitError, ConvergenceError) as e:
        logger.error(str(e))
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
