"""
ridemin command line: generate, solve, validate, compare.

Exit codes: 0 success, 2 bad spec or file, 3 algorithm precondition not met,
4 oracle budget exceeded, 5 invalid solution or internal invariant breach.
"""
import argparse

from ridemin.cli import compare, generate, solve, validate
from ridemin.cli.common import add_verbose, configure_logging, exit_code, new_parser
from ridemin.cli.compare import compare_cli
from ridemin.cli.generate import generate_cli
from ridemin.cli.solve import solve_cli
from ridemin.cli.validate import validate_cli

COMMANDS = {
    'generate': generate,
    'solve': solve,
    'validate': validate,
    'compare': compare,
}


def build_parser():
    parser = new_parser(__doc__)
    subparsers = parser.add_subparsers(dest='command', required=True)
    for name, module in COMMANDS.items():
        sub = subparsers.add_parser(name, help=module.__doc__.strip().splitlines()[0],
                                    fromfile_prefix_chars='@')
        add_verbose(sub, default=argparse.SUPPRESS)
        module.add_arguments(sub)
        sub.set_defaults(run=module.run)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    configure_logging(args.verbose)
    return exit_code(args.run, args)
