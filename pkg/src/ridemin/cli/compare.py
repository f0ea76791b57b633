"""
Run several solvers over a set of instance files and write one CSV row per (instance, algorithm).

Settings can come from flags or from a JSON/YAML file given with --config; flags win.
"""
from loguru import logger

from ridemin.algo import ALGORITHMS, OracleBudget
from ridemin.anlz.summary import reports_to_frame, write_summary
from ridemin.cli.common import add_budget, configure_logging, exit_code, new_parser
from ridemin.errors import InvariantBreach
from ridemin.io.out import get_report_writer
from ridemin.main import compare, hard_failures
from ridemin.schema import validate_config


def run_compare(instances, algorithms=ALGORITHMS, *, out='-', summary=None, k=1, budget=None,
                jobs=1, allow_invalid=False, timing=True):
    reports = compare(instances, algorithms, jobs=jobs, timing=timing, k=k, budget=budget)
    with get_report_writer(out) as fh:
        fh.write_all(reports)
    if summary:
        write_summary(reports_to_frame(r for r in reports if r.status != 'summary'), summary)
    failed = hard_failures(reports, allow_invalid=allow_invalid)
    if failed:
        raise InvariantBreach(f'{len(failed)} run(s) failed: {", ".join(map(str, failed[:5]))}')
    return reports


def add_arguments(parser):
    parser.add_argument('instances', nargs='*', default=None,
                        help='Instance files or glob patterns')
    parser.add_argument('--config', default=None,
                        help='JSON or YAML file with compare settings')
    parser.add_argument('--algo', dest='algorithms', nargs='+', choices=ALGORITHMS, default=None,
                        help='Solvers to run (default all)')
    parser.add_argument('-o', '--out', default=None,
                        help='CSV report to write; default to stdout')
    parser.add_argument('--summary', default=None,
                        help='Write a per-algorithm summary CSV here')
    parser.add_argument('--k', type=int, default=None,
                        help='EdgeSwap depth')
    parser.add_argument('--jobs', type=int, default=None,
                        help='Worker processes')
    add_budget(parser)
    parser.add_argument('--allow-invalid', dest='allow_invalid', action='store_true', default=None,
                        help='Do not fail on invalid solutions')
    parser.add_argument('--no-timing', dest='timing', action='store_false', default=True,
                        help='Leave run times blank for reproducible reports')


def _settings(args):
    conf = validate_config(args.config) if args.config else {}
    budget_conf = conf.get('budget', {})
    default = OracleBudget()
    budget = OracleBudget(
        max_trips=args.budget_trips or budget_conf.get('trips') or default.max_trips,
        time_limit=args.budget_secs or budget_conf.get('seconds') or default.time_limit,
    )
    return dict(
        instances=args.instances or conf.get('instances', []),
        algorithms=args.algorithms or conf.get('algorithms') or list(ALGORITHMS),
        out=args.out or conf.get('out') or '-',
        summary=args.summary or conf.get('summary'),
        k=args.k or conf.get('k', 1),
        budget=budget,
        jobs=args.jobs or conf.get('jobs', 1),
        allow_invalid=args.allow_invalid if args.allow_invalid is not None else conf.get('allow_invalid', False),
        timing=args.timing,
    ), conf


def run(args):
    settings, conf = _settings(args)
    if conf.get('logger', {}).get('verbose'):
        configure_logging(True)
    if not settings['instances']:
        logger.warning('No instance files given; writing an empty report')
    run_compare(**settings)
    return 0


def compare_cli(argv=None):
    parser = new_parser(__doc__)
    add_arguments(parser)
    args = parser.parse_args(argv)
    configure_logging(args.verbose)
    return exit_code(run, args)
