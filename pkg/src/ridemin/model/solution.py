from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Mapping, NamedTuple, Optional, Tuple

from loguru import logger

from ridemin.errors import InvariantBreach, SpecError
from ridemin.model.instance import Instance
from ridemin.model.network import path_length
from ridemin.model.schedule import cheapest_schedule, feasible_schedule, infeasibility_kind
from ridemin.model.trip import PickupPlan

VIOLATION_KINDS = ('capacity', 'stops', 'detour', 'coverage', 'overlap', 'time', 'path')


class Assignment(NamedTuple):
    served: FrozenSet[int]  # sigma(i), driver included
    plan: Optional[PickupPlan] = None


@dataclass(frozen=True)
class Solution:
    """A driver set S with each driver's served set sigma(i) and pickup plan."""
    assignments: Mapping[int, Assignment] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, 'assignments', {
            driver: Assignment(frozenset(a.served), a.plan)
            for driver, a in sorted(self.assignments.items())
        })

    @classmethod
    def from_served(cls, inst: Instance, served: Mapping[int, Iterable[int]], cheapest=False):
        """Materialize pickup plans for each driver's served set.

        A served set that has no feasible schedule means the caller built it
        from an inconsistent serve relation.

        :param cheapest: pick each driver's shortest feasible plan rather than the first found
        """
        schedule = cheapest_schedule if cheapest else feasible_schedule
        assignments = {}
        for driver, members in served.items():
            members = frozenset(members) | {driver}
            plan = schedule(inst, driver, members - {driver})
            if plan is None:
                kind = infeasibility_kind(inst, driver, members - {driver})
                raise InvariantBreach(f'Driver {driver} cannot serve {sorted(members - {driver})} ({kind})')
            assignments[driver] = Assignment(members, plan)
        return cls(assignments)

    @classmethod
    def solo(cls, inst: Instance):
        return cls.from_served(inst, {i: () for i in inst.ids})

    def __len__(self):
        return len(self.assignments)

    def __contains__(self, driver):
        return driver in self.assignments

    def __getitem__(self, driver) -> FrozenSet[int]:
        return self.assignments[driver].served

    @property
    def drivers(self) -> List[int]:
        return list(self.assignments)

    def served(self) -> FrozenSet[int]:
        """sigma(S): every trip delivered by some driver."""
        return frozenset(t for a in self.assignments.values() for t in a.served)

    def passenger_count(self) -> int:
        return sum(len(a.served) - 1 for a in self.assignments.values())

    def served_map(self) -> Dict[int, FrozenSet[int]]:
        return {driver: a.served for driver, a in self.assignments.items()}


@dataclass(frozen=True)
class ValidationReport:
    violations: Tuple[Tuple[str, Optional[int], str], ...] = ()

    @property
    def valid(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.valid

    def kinds(self):
        return {kind for kind, *_ in self.violations}

    def __str__(self):
        if self.valid:
            return 'valid'
        return '\n'.join(f'{kind}\t{driver}\t{detail}' for kind, driver, detail in self.violations)


def validate_solution(inst: Instance, sol: Solution, complete=True) -> ValidationReport:
    """Check a (partial) solution against every trip constraint.

    :param complete: require sigma(S) = R; set False for partial solutions
    """
    violations = []
    ids = set(inst.ids)
    owner = {}
    for driver, (served, plan) in sol.assignments.items():
        if driver not in ids:
            violations.append(('coverage', driver, f'unknown driver trip {driver}'))
            continue
        if driver not in served:
            violations.append(('coverage', driver, 'driver missing from its own served set'))
        unknown = sorted(t for t in served if t not in ids)
        if unknown:
            violations.append(('coverage', driver, f'unknown trips {unknown}'))
            continue
        for t in served:
            if t in owner:
                violations.append(('overlap', driver, f'trip {t} also served by driver {owner[t]}'))
            else:
                owner[t] = driver
        passengers = served - {driver}
        if driver in owner and owner[driver] != driver:
            continue  # reported as overlap
        kind = infeasibility_kind(inst, driver, passengers)
        if kind is not None:
            violations.append((kind, driver, f'cannot serve {sorted(passengers)}'))
        elif plan is not None:
            violations.extend(_check_plan(inst, driver, passengers, plan))
    if complete:
        missing = sorted(ids - set(owner))
        if missing:
            violations.append(('coverage', None, f'unserved trips {missing}'))
    report = ValidationReport(tuple(violations))
    if not report.valid:
        logger.debug(f'Solution rejected with {len(violations)} violation(s)')
    return report


def _check_plan(inst: Instance, driver: int, passengers, plan: PickupPlan):
    """Re-drive a stored plan and report where it breaks a constraint."""
    d = inst.trip(driver)
    net = inst.network
    if plan.passengers != passengers:
        yield 'coverage', driver, f'plan picks up {sorted(plan.passengers)}, served set is {sorted(passengers)}'
        return
    route = plan.route
    if not route or route[0] != d.source or route[-1] != d.destination:
        yield 'path', driver, 'route does not run from source to destination'
        return
    if not all(net.graph.has_edge(u, v) for u, v in zip(route, route[1:])):
        yield 'path', driver, 'route uses a missing edge'
        return
    if d.detour_limit == 0:
        if route not in d.preferred_paths:
            yield 'path', driver, 'route is not a preferred path'
            return
    elif path_length(net, route) > max(path_length(net, p) for p in d.preferred_paths) + d.detour_limit:
        yield 'detour', driver, f'route length {path_length(net, route)} exceeds the detour limit'
        return
    if plan.stop_count(d.source) > d.stop_limit:
        yield 'stops', driver, f'{plan.stop_count(d.source)} stops exceed limit {d.stop_limit}'
    if plan.depart < d.depart_earliest:
        yield 'time', driver, f'departs at {plan.depart} before {d.depart_earliest}'
    pickups = {p.index: p for p in plan.pickups}
    last_index = -1
    time = plan.depart
    arrivals = []
    boarded = {}
    for k, vertex in enumerate(route):
        if k:
            time += net.length(route[k - 1], vertex)
        arrivals.append(time)
        pickup = pickups.get(k)
        if pickup is None:
            continue
        if pickup.vertex != vertex or k <= last_index:
            yield 'path', driver, f'pickup at {pickup.vertex} does not match route position {k}'
            return
        last_index = k
        if pickup.time < time:
            yield 'time', driver, f'pickup at {vertex} at {pickup.time} before reaching it at {time}'
        time = max(time, pickup.time)
        for p in pickup.passengers:
            if inst.trip(p).source != vertex:
                yield 'path', driver, f'trip {p} does not start at {vertex}'
            if pickup.time < inst.trip(p).depart_earliest:
                yield 'time', driver, f'trip {p} picked up at {pickup.time} before it departs'
            boarded[p] = (k, pickup.time)
    if set(boarded) != passengers:
        yield 'path', driver, 'pickups are not on the route'
        return
    for p, (k, picked) in boarded.items():
        t = inst.trip(p)
        try:
            drop = route.index(t.destination, k)
        except ValueError:
            yield 'path', driver, f'route never reaches the destination of trip {p}'
            continue
        arrive = arrivals[drop] if drop > k else picked
        if arrive > t.arrive_latest:
            yield 'time', driver, f'trip {p} delivered at {arrive} after {t.arrive_latest}'
    if arrivals[-1] > d.arrive_latest:
        yield 'time', driver, f'driver arrives at {arrivals[-1]} after {d.arrive_latest}'


def solution_metrics(inst: Instance, sol: Solution) -> Tuple[int, int]:
    """(driver count, total distance driven)."""
    report = validate_solution(inst, sol)
    if not report.valid:
        raise SpecError(f'Cannot measure an invalid solution:\n{report}')
    distance = 0
    for driver, (served, plan) in sol.assignments.items():
        if plan is None:
            plan = feasible_schedule(inst, driver, served - {driver})
        distance += plan.distance
    return len(sol), distance
