import argparse
import sys

from loguru import logger

from ridemin.algo import OracleBudget
from ridemin.errors import RideminError


def configure_logging(verbose=False):
    logger.remove()
    logger.add(sys.stderr, level='DEBUG' if verbose else 'INFO')


def new_parser(description=None):
    parser = argparse.ArgumentParser(fromfile_prefix_chars='@', description=description)
    add_verbose(parser)
    return parser


def add_verbose(parser, default=False):
    parser.add_argument('-v', '--verbose', action='store_true', default=default,
                        help='Log per-step detail')


def add_budget(parser):
    parser.add_argument('--budget-trips', dest='budget_trips', type=int, default=None,
                        help='Most trips the exact oracle will search after forced drivers are fixed')
    parser.add_argument('--budget-secs', dest='budget_secs', type=float, default=None,
                        help='Wall-clock limit for the exact oracle')


def budget_from_args(args) -> OracleBudget:
    default = OracleBudget()
    return OracleBudget(
        max_trips=args.budget_trips or default.max_trips,
        time_limit=args.budget_secs or default.time_limit,
    )


def exit_code(func, *args, **kwargs) -> int:
    """Run a command, mapping ridemin errors to their exit codes."""
    try:
        result = func(*args, **kwargs)
    except RideminError as e:
        logger.error(f'{type(e).__name__}: {e}')
        return e.exit_code
    except OSError as e:
        logger.error(f'{type(e).__name__}: {e}')
        return 1
    return result or 0
