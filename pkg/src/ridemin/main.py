"""
Run solvers on instances and collect RunReports; the command line is a thin layer over this.
"""
import glob
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Iterable, List, Optional, Sequence, Tuple

from loguru import logger

from ridemin.algo import ALGORITHMS, OracleBudget, edge_swap, exact_min_distance, exact_min_drivers
from ridemin.algo import solve_phases, star_improve
from ridemin.algo.result import RunReport
from ridemin.errors import BudgetExceeded, InvariantBreach, ParseError, PreconditionError, RideminError, SpecError
from ridemin.io.instance_file import read_instance
from ridemin.model.instance import Instance
from ridemin.model.solution import Solution, validate_solution

OBJECTIVES = ('drivers', 'distance')
ERROR_KINDS = (
    (ParseError, 'parse'),
    (SpecError, 'spec'),
    (PreconditionError, 'precondition'),
    (BudgetExceeded, 'budget'),
    (InvariantBreach, 'invariant'),
    (OSError, 'io'),
)


def run_algorithm(inst: Instance, algo: str, *, k=1, budget: Optional[OracleBudget] = None,
                  objective='drivers', trace: Optional[list] = None, stats: Optional[dict] = None) -> Solution:
    """Dispatch to one solver by name; errors propagate unchanged."""
    if algo == 'star-improve':
        return star_improve(inst, stats=stats)
    elif algo == 'edge-swap':
        return edge_swap(inst, k=k, stats=stats)
    elif algo == 'phase':
        return solve_phases(inst, trace=trace)
    elif algo == 'exact':
        if objective == 'drivers':
            return exact_min_drivers(inst, budget)
        elif objective == 'distance':
            return exact_min_distance(inst, budget)
        raise SpecError(f'Unknown objective "{objective}"; expected one of {", ".join(OBJECTIVES)}')
    raise SpecError(f'Unknown algorithm "{algo}"; expected one of {", ".join(ALGORITHMS)}')


def measure(inst: Instance, algo: str, sol: Solution, seconds=None) -> RunReport:
    report = validate_solution(inst, sol)
    return RunReport(
        inst.name,
        algo,
        drivers=len(sol),
        distance=sum(a.plan.distance for a in sol.assignments.values() if a.plan is not None),
        passengers=sol.passenger_count(),
        seconds=seconds,
        valid=report.valid,
        status='ok' if report.valid else 'invalid',
        extras={'violations': str(report)} if not report.valid else None,
    )


def run_one(inst: Instance, algo: str, *, soft_errors=True, **kwargs) -> Tuple[RunReport, Optional[Solution]]:
    """Solve and measure one cell.

    :param soft_errors: record precondition and budget failures as skipped rows
        instead of raising
    """
    start = time.time()
    try:
        sol = run_algorithm(inst, algo, **kwargs)
    except PreconditionError as e:
        if not soft_errors:
            raise
        logger.warning(f'{inst.name}: {algo} skipped: {e}')
        return RunReport.skipped(inst.name, algo, f'condition {e.condition}'), None
    except BudgetExceeded as e:
        if not soft_errors:
            raise
        logger.warning(f'{inst.name}: {algo} skipped: {e}')
        return RunReport.skipped(inst.name, algo, 'budget'), None
    report = measure(inst, algo, sol, seconds=time.time() - start)
    logger.info(f'{inst.name}: {algo}: {report.drivers} drivers, distance {report.distance}'
                f'{"" if report.valid else " (INVALID)"}')
    return report, sol


def expand_instances(patterns: Iterable[str]) -> List[str]:
    paths = set()
    for pattern in patterns:
        paths.update(glob.glob(pattern))
    return sorted(paths)


def load_named(path) -> Instance:
    """Read an instance file, naming the instance after its path if the file has no name."""
    inst = read_instance(path)
    if not inst.name:
        inst = Instance(inst.network, inst.trips, name=str(path))
    return inst


def error_kind(e: Exception) -> str:
    for cls, kind in ERROR_KINDS:
        if isinstance(e, cls):
            return kind
    return 'internal'


def _cell(args):
    """One compare row; a file or solver failure becomes an `error:<kind>` row."""
    path, algo, kwargs = args
    name = str(path)
    try:
        inst = load_named(path)
        name = inst.name
        report, _ = run_one(inst, algo, **kwargs)
    except (RideminError, OSError) as e:
        kind = error_kind(e)
        logger.error(f'{path}: {algo}: {kind} error: {e}')
        report = RunReport(name, algo, status=f'error:{kind}', valid=False, extras={'error': str(e)})
    return report


def add_ratios(reports: Sequence[RunReport]) -> Optional[float]:
    """Fill `ratio` (drivers / exact drivers) where the oracle ran; return the largest."""
    optimum = {r.instance: r.drivers for r in reports if r.algorithm == 'exact' and r.status == 'ok'}
    worst = None
    for r in reports:
        if r.status == 'ok' and r.instance in optimum and optimum[r.instance]:
            r.ratio = r.drivers / optimum[r.instance]
            worst = r.ratio if worst is None else max(worst, r.ratio)
    return worst


def compare(patterns: Iterable[str], algorithms: Sequence[str] = ALGORITHMS, *, jobs=1,
            timing=True, **kwargs) -> List[RunReport]:
    """One report per (instance, algorithm), sorted, followed by a summary row.

    :param jobs: worker processes; cells are independent
    :param timing: when False, seconds are left blank so reruns are byte-identical
    """
    for algo in algorithms:
        if algo not in ALGORITHMS:
            raise SpecError(f'Unknown algorithm "{algo}"; expected one of {", ".join(ALGORITHMS)}')
    paths = expand_instances(patterns)
    cells = [(path, algo, kwargs) for path in paths for algo in algorithms]
    logger.info(f'Comparing {len(algorithms)} algorithm(s) on {len(paths)} instance(s)')
    if jobs > 1 and len(cells) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(_cell, cells))
    else:
        reports = [_cell(cell) for cell in cells]
    reports.sort(key=RunReport.sort_key)
    if not timing:
        for r in reports:
            r.seconds = None
    worst = add_ratios(reports)
    if reports:
        reports.append(RunReport('*', '*', ratio=worst, status='summary'))
        if worst is not None:
            logger.info(f'Largest ratio over the oracle: {worst:.4f}')
    return reports


def hard_failures(reports: Iterable[RunReport], allow_invalid=False) -> List[RunReport]:
    return [
        r for r in reports
        if r.status.startswith('error') or (r.status == 'invalid' and not allow_invalid)
    ]
