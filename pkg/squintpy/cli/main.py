import argparse
import logging
import sys
from typing import List, Optional

from squintpy._version import __version__
from squintpy.exceptions import CatalogError, ScenarioError, SquintError
from .commands import UsageError, cmd_advise, cmd_atm, cmd_cost, cmd_devices, cmd_pattern, \
    cmd_sweep

__all__ = ["build_parser", "main"]

logger = logging.getLogger(__name__)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog='squintpy',
                     description="Beam squint performance and cost trade-off of wideband hybrid "
                                 "beamforming architectures")
    parser.add_argument('-v', '--verbose', action='count', default=0,
                        help="INFO logging, repeat for DEBUG")
    parser.add_argument('--version', action='version', version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest='command', parser_class=_Parser)
    sub.required = True

    p = sub.add_parser('sweep', help="Sum spectral efficiency versus fractional bandwidth")
    _add_scenario(p)
    _add_bf_range(p)
    p.add_argument('--workers', type=int, default=None,
                   help="worker threads, overrides SQUINTPY_WORKERS")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser('pattern', help="Beam gain versus angle per carrier")
    _add_scenario(p)
    p.add_argument('--bf', type=float, nargs='+', default=None,
                   help="carrier offsets b = f / f0 - 1")
    p.add_argument('--angle-steps', type=int, default=181,
                   help="number of angles between -90 and 90 degrees")
    p.set_defaults(func=cmd_pattern)

    p = sub.add_parser('cost', help="Architecture cost versus fractional bandwidth")
    _add_scenario(p)
    _add_bf_range(p)
    p.set_defaults(func=cmd_cost)

    p = sub.add_parser('advise', help="Architecture recommendation at the scenario bandwidth")
    _add_scenario(p)
    p.add_argument('--perf-weight', type=float, default=0.5,
                   help="weight of the performance term, the cost weight is 1 - perf-weight")
    p.set_defaults(func=cmd_advise)

    p = sub.add_parser('atm', help="Slice of the atmospheric attenuation table")
    p.add_argument('--f-min-ghz', type=float, default=1.0)
    p.add_argument('--f-max-ghz', type=float, default=300.0)
    p.add_argument('--step-ghz', type=float, default=1.0)
    p.add_argument('--out', default=None, help="CSV file, standard output when absent")
    p.set_defaults(func=cmd_atm)

    p = sub.add_parser('devices', help="List the phase shifter and TTD catalog")
    p.add_argument('--catalog', default=None, help="CSV catalog, the bundled one when absent")
    p.add_argument('--band-ghz', type=float, nargs=2, default=None, metavar=('LO', 'HI'),
                   help="keep devices covering this band")
    p.add_argument('--out', default=None, help="CSV file, standard output when absent")
    p.set_defaults(func=cmd_devices)

    return parser


def _add_scenario(p: argparse.ArgumentParser):
    p.add_argument('config', help="scenario JSON file")
    p.add_argument('--seed', type=int, default=None, help="overrides the scenario seed")
    p.add_argument('--out', default=None, help="CSV file, standard output when absent")


def _add_bf_range(p: argparse.ArgumentParser):
    p.add_argument('--bf-min', type=float, default=0.01)
    p.add_argument('--bf-max', type=float, default=0.3)
    p.add_argument('--bf-steps', type=int, default=20)


def main(argv: Optional[List[str]] = None) -> int:
    """
    Runs the command line tool.

    Returns 0 on success, 1 on configuration errors (unreadable or invalid scenario or catalog,
    bad flags) and 2 on any other failure. Error messages go to standard error.
    """
    try:
        args = build_parser().parse_args(argv)
    except UsageError as e:
        return _fail(e, 1)

    logging.basicConfig(stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s",
                        level=(logging.WARNING, logging.INFO, logging.DEBUG)[min(args.verbose, 2)])
    try:
        return args.func(args)
    except (ScenarioError, CatalogError, UsageError, OSError) as e:
        return _fail(e, 1)
    except (SquintError, ArithmeticError, RuntimeError, ValueError) as e:
        logger.debug("command failed", exc_info=True)
        return _fail(e, 2)


def _fail(error: Exception, code: int) -> int:
    print(f"squintpy: error: {error}", file=sys.stderr)
    return code
