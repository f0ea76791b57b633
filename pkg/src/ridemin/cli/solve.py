"""
Solve one instance file and write the solution; the run report is logged and optionally appended as JSONL.
"""
import json

from loguru import logger

from ridemin.algo import ALGORITHMS
from ridemin.cli.common import add_budget, budget_from_args, configure_logging, exit_code, new_parser
from ridemin.errors import InvariantBreach
from ridemin.io.out import JsonlReportWriter
from ridemin.io.solution_file import write_solution
from ridemin.io.streams import open_text
from ridemin.main import OBJECTIVES, load_named, run_one


def solve(instance, *, algo='phase', out='-', k=1, budget=None, objective='drivers', trace=None,
          report=None, allow_invalid=False, timing=True):
    inst = load_named(instance)
    steps = [] if trace else None
    result, sol = run_one(inst, algo, soft_errors=False, k=k, budget=budget,
                          objective=objective, trace=steps)
    if not result.valid and not allow_invalid:
        raise InvariantBreach(f'{algo} produced an invalid solution:\n{result.extras.get("violations")}')
    write_solution(sol, out, instance_name=inst.name)
    if trace:
        with open_text(trace, 'w', newline='\n') as fh:
            for entry in steps:
                fh.write(f'{entry}\n')
    if not timing:
        result.seconds = None
    logger.info(f'Report: {json.dumps(result.as_dict())}')
    if report:
        with JsonlReportWriter(report, mode='a') as fh:
            fh.write(result)
    return result


def add_arguments(parser):
    parser.add_argument('instance', help='Instance file ("-" for stdin)')
    parser.add_argument('--algo', choices=ALGORITHMS, default='phase',
                        help='Solver to run')
    parser.add_argument('-o', '--out', default='-',
                        help='Solution file to write; default to stdout')
    parser.add_argument('--k', type=int, default=1,
                        help='EdgeSwap depth: most matched arcs removed in one swap')
    parser.add_argument('--objective', choices=OBJECTIVES, default='drivers',
                        help='What the exact oracle minimizes')
    add_budget(parser)
    parser.add_argument('--trace', default=None,
                        help='Write the phase solver trace to this file')
    parser.add_argument('--report', default=None,
                        help='Append the run report to this JSONL file')
    parser.add_argument('--allow-invalid', dest='allow_invalid', action='store_true', default=False,
                        help='Write the solution even if validation fails')
    parser.add_argument('--no-timing', dest='timing', action='store_false', default=True,
                        help='Leave run times out of the report')


def run(args):
    solve(args.instance, algo=args.algo, out=args.out, k=args.k, budget=budget_from_args(args),
          objective=args.objective, trace=args.trace, report=args.report,
          allow_invalid=args.allow_invalid, timing=args.timing)
    return 0


def solve_cli(argv=None):
    parser = new_parser(__doc__)
    add_arguments(parser)
    args = parser.parse_args(argv)
    configure_logging(args.verbose)
    return exit_code(run, args)
