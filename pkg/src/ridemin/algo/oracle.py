"""
Exhaustive solvers for small instances, used as ground truth.

Trips nobody can serve are fixed as drivers up front. Trips with identical
parameters are interchangeable, so driver sets and passenger assignments are
enumerated over classes of such trips with counts rather than over ids.
"""
import itertools
import time
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterator, List, Optional, Sequence, Tuple

import networkx as nx
from loguru import logger

from ridemin.errors import BudgetExceeded, SpecError
from ridemin.graph.serve import build_serve_digraph
from ridemin.model.instance import Instance
from ridemin.model.network import shortest_distance
from ridemin.model.schedule import cheapest_schedule, feasible_schedule
from ridemin.model.solution import Solution


@dataclass(frozen=True)
class OracleBudget:
    max_trips: int = 12
    time_limit: Optional[float] = 60.0

    def __post_init__(self):
        if self.max_trips <= 0:
            raise SpecError(f'Oracle budget max_trips must be positive, got {self.max_trips}')
        if self.time_limit is not None and self.time_limit <= 0:
            raise SpecError(f'Oracle budget time_limit must be positive, got {self.time_limit}')

    @classmethod
    def structured(cls, time_limit: Optional[float] = 60.0):
        """Budget for gadget instances, whose free trips fall into a few classes."""
        return cls(max_trips=32, time_limit=time_limit)


class _Clock:

    def __init__(self, budget: OracleBudget):
        self.deadline = time.time() + budget.time_limit if budget.time_limit else None

    def check(self):
        if self.deadline is not None and time.time() > self.deadline:
            raise BudgetExceeded('oracle budget exceeded (time limit)')


def forced_drivers(dg: nx.DiGraph) -> List[int]:
    """Trips no other trip can serve; they drive in every solution."""
    return sorted(v for v in dg if dg.out_degree(v) == 0)


def _classes(inst: Instance, ids) -> List[List[int]]:
    groups = {}
    for i in sorted(ids):
        groups.setdefault(inst.trip(i).attributes(), []).append(i)
    return sorted(groups.values())


class _Search:
    """Passenger layouts for one driver set, distributing passenger classes over drivers."""

    def __init__(self, inst: Instance, dg: nx.DiGraph, clock: _Clock):
        self.inst = inst
        self.dg = dg
        self.clock = clock
        self._distance: Dict[Tuple[int, FrozenSet[int]], int] = {}

    def assign(self, drivers: Sequence[int], passenger_classes: List[List[int]]) -> Optional[Dict[int, List[int]]]:
        """The first feasible layout, or None."""
        return next(self.layouts(drivers, passenger_classes), None)

    def layouts(self, drivers: Sequence[int], passenger_classes: List[List[int]]) -> Iterator[Dict[int, List[int]]]:
        """Every feasible layout, up to swapping interchangeable trips."""
        drivers = sorted(drivers, key=lambda d: (self.inst.trip(d).attributes(), d))
        load = {d: [] for d in drivers}
        # classes with the fewest possible drivers first
        options = []
        for members in passenger_classes:
            rep = members[0]
            compatible = [d for d in drivers if self.dg.has_edge(rep, d)]
            if not compatible:
                return
            options.append((len(compatible), members, compatible))
        options.sort(key=lambda o: (o[0], o[1]))
        if sum(len(m) for _, m, _ in options) > sum(self.inst.trip(d).capacity for d in drivers):
            return
        yield from self._place(options, 0, load)

    def distance(self, driver, passengers) -> int:
        """Length of the driver's shortest feasible route carrying `passengers`."""
        key = driver, frozenset(passengers)
        if key not in self._distance:
            self._distance[key] = cheapest_schedule(self.inst, driver, passengers).distance
        return self._distance[key]

    def _place(self, options, k, load):
        if k == len(options):
            yield {d: list(members) for d, members in load.items()}
            return
        self.clock.check()
        _, members, compatible = options[k]
        yield from self._spread(options, k, load, list(members), compatible, 0, None)

    def _spread(self, options, k, load, members, compatible, idx, previous):
        if not members:
            yield from self._place(options, k + 1, load)
            return
        if idx == len(compatible):
            return
        spare = sum(self.inst.trip(d).capacity - len(load[d]) for d in compatible[idx:])
        if spare < len(members):
            return
        d = compatible[idx]
        limit = min(self.inst.trip(d).capacity - len(load[d]), len(members))
        if previous is not None:
            prev_d, prev_take, prev_load = previous
            if self._twins(prev_d, d) and prev_load == tuple(load[d]):
                limit = min(limit, prev_take)
        before = tuple(load[d])
        for take in range(limit, -1, -1):
            chosen = members[:take]
            if take and feasible_schedule(self.inst, d, load[d] + chosen) is None:
                continue
            load[d].extend(chosen)
            yield from self._spread(options, k, load, members[take:], compatible, idx + 1, (d, take, before))
            del load[d][len(before):]

    def _twins(self, a, b):
        return self.inst.trip(a).attributes() == self.inst.trip(b).attributes()


def _prepare(inst: Instance, budget: Optional[OracleBudget]):
    budget = budget or OracleBudget()
    dg = build_serve_digraph(inst)
    forced = forced_drivers(dg)
    free = [i for i in inst.ids if i not in set(forced)]
    if len(free) > budget.max_trips:
        raise BudgetExceeded(f'oracle budget exceeded: {len(free)} trips to search,'
                             f' budget allows {budget.max_trips}')
    logger.debug(f'Oracle: {len(forced)} forced drivers, {len(free)} trips to search')
    return dg, forced, _classes(inst, free), _Clock(budget)


def _extras(classes, size):
    """Count vectors choosing `size` extra drivers across classes."""
    def rec(k, left):
        if k == len(classes):
            if left == 0:
                yield ()
            return
        for take in range(min(left, len(classes[k])), -1, -1):
            for rest in rec(k + 1, left - take):
                yield (take,) + rest
    return rec(0, size)


def _split(classes, counts):
    drivers, passengers = [], []
    for members, take in zip(classes, counts):
        drivers.extend(members[:take])
        if members[take:]:
            passengers.append(members[take:])
    return drivers, passengers


def _solve(inst, search, forced, classes, counts):
    extra, passengers = _split(classes, counts)
    drivers = list(forced) + extra
    load = search.assign(drivers, passengers)
    if load is None:
        return None
    return Solution.from_served(inst, load)


def exact_min_drivers(inst: Instance, budget: Optional[OracleBudget] = None) -> Solution:
    """A solution with the fewest possible drivers."""
    dg, forced, classes, clock = _prepare(inst, budget)
    search = _Search(inst, dg, clock)
    free = sum(len(c) for c in classes)
    for size in range(0, free + 1):
        for counts in _extras(classes, size):
            clock.check()
            sol = _solve(inst, search, forced, classes, counts)
            if sol is not None:
                logger.info(f'Oracle: minimum {len(sol)} drivers')
                return sol
    raise SpecError('No feasible solution: some trip cannot even drive alone')


def exact_min_distance(inst: Instance, budget: Optional[OracleBudget] = None) -> Solution:
    """A solution with the least total distance driven.

    Driver sets are tried in order of a lower bound, the sum of their
    shortest source-destination distances, and every passenger layout of a
    set is priced with each driver's cheapest route.
    """
    dg, forced, classes, clock = _prepare(inst, budget)
    search = _Search(inst, dg, clock)
    net = inst.network

    def floor(i):
        trip = inst.trip(i)
        return shortest_distance(net, trip.source, trip.destination)

    base = sum(floor(i) for i in forced)
    candidates = []
    for combo in itertools.product(*(range(len(c) + 1) for c in classes)):
        bound = base + sum(take * floor(c[0]) for c, take in zip(classes, combo))
        candidates.append((bound, sum(combo), combo))
    candidates.sort()
    best, best_distance = None, None
    for bound, _, counts in candidates:
        if best is not None and bound >= best_distance:
            break
        extra, passengers = _split(classes, counts)
        drivers = list(forced) + extra
        for load in search.layouts(drivers, passengers):
            clock.check()
            distance = sum(search.distance(d, load[d]) for d in drivers)
            if best is None or distance < best_distance:
                best, best_distance = load, distance
            if best_distance <= bound:
                break
    if best is None:
        raise SpecError('No feasible solution: some trip cannot even drive alone')
    logger.info(f'Oracle: minimum distance {best_distance} with {len(best)} drivers')
    return Solution.from_served(inst, best, cheapest=True)


def exact_max_matching(dg: nx.DiGraph, caps=None, stops=None, budget: Optional[OracleBudget] = None) -> int:
    """Largest number of passengers over vertex-disjoint stars within seat and stop limits."""
    budget = budget or OracleBudget()
    if dg.number_of_nodes() > budget.max_trips:
        raise BudgetExceeded(f'oracle budget exceeded: {dg.number_of_nodes()} vertices,'
                             f' budget allows {budget.max_trips}')
    clock = _Clock(budget)
    caps = caps if caps is not None else {v: dg.nodes[v]['capacity'] for v in dg}
    stops = stops if stops is not None else {v: dg.nodes[v]['stop_limit'] for v in dg}
    source = {v: dg.nodes[v]['source'] for v in dg}
    order = sorted(dg)
    leaves: Dict[int, List[int]] = {v: [] for v in order}
    role = {}  # v -> 'leaf' once it rides with someone
    best = [0]

    def stops_of(root, extra):
        return len(({source[u] for u in leaves[root]} | {source[extra]}) - {source[root]})

    def rec(k, matched):
        clock.check()
        if matched + (len(order) - k) <= best[0]:
            return
        if k == len(order):
            best[0] = matched
            return
        v = order[k]
        if not leaves[v]:
            for root in sorted(dg.successors(v)):
                if role.get(root) == 'leaf' or len(leaves[root]) >= caps[root]:
                    continue
                if stops_of(root, v) > stops[root]:
                    continue
                leaves[root].append(v)
                role[v] = 'leaf'
                rec(k + 1, matched + 1)
                del role[v]
                leaves[root].pop()
        rec(k + 1, matched)

    rec(0, 0)
    return best[0]
