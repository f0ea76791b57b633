"""
Check a solution file against its instance; exits 5 when any constraint is broken.
"""
from loguru import logger

from ridemin.cli.common import configure_logging, exit_code, new_parser
from ridemin.errors import InvariantBreach
from ridemin.io.instance_file import read_instance
from ridemin.io.solution_file import read_solution
from ridemin.model.solution import ValidationReport, validate_solution


def validate(instance, solution, *, partial=False) -> ValidationReport:
    inst = read_instance(instance)
    sol = read_solution(solution)
    report = validate_solution(inst, sol, complete=not partial)
    if report.valid:
        logger.info(f'valid: {len(sol)} drivers, {sol.passenger_count()} passengers')
    else:
        for kind, driver, detail in report.violations:
            logger.warning(f'{kind}: driver {driver}: {detail}')
    return report


def add_arguments(parser):
    parser.add_argument('instance', help='Instance file')
    parser.add_argument('solution', help='Solution file ("-" for stdin)')
    parser.add_argument('--partial', action='store_true', default=False,
                        help='Do not require every trip to be served')


def run(args):
    report = validate(args.instance, args.solution, partial=args.partial)
    if not report.valid:
        raise InvariantBreach(f'{len(report.violations)} violation(s): {", ".join(sorted(report.kinds()))}')
    return 0


def validate_cli(argv=None):
    parser = new_parser(__doc__)
    add_arguments(parser)
    args = parser.parse_args(argv)
    configure_logging(args.verbose)
    return exit_code(run, args)
