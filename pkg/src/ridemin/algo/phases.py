"""
Three-phase driver minimization on inverse-tree instances.

Phase I serves the trips that can only serve themselves (W), Phase II the
remaining zero-stop trips (Z), and Phase III everything else, walking the
meta graph from the largest label down to the sink.
"""
import time
from typing import Dict, List, NamedTuple, Optional, Set, Tuple

from loguru import logger

from ridemin.errors import InvariantBreach, PreconditionError
from ridemin.graph.meta import MetaGraph, build_meta_graph, label_nodes, route_shape
from ridemin.model.instance import Instance
from ridemin.model.schedule import route_serves
from ridemin.model.solution import Solution


class TraceEntry(NamedTuple):
    phase: int
    driver: int
    served: Tuple[int, ...]
    free: int
    stop: int

    def __str__(self):
        return f'{self.phase} {self.driver} {self.free} {self.stop} {" ".join(map(str, self.served))}'.rstrip()


class PhaseState:
    """Partial solution (S, sigma) plus the bookkeeping the phases need."""

    def __init__(self, inst: Instance, mg: MetaGraph):
        self.inst = inst
        self.mg = mg
        self.sigma: Dict[int, Set[int]] = {}
        self.owner: Dict[int, int] = {}
        self.free: Dict[int, int] = {t.id: t.capacity for t in inst}
        self.stop: Dict[int, int] = {t.id: 0 for t in inst}
        self.W, self.X = partition_trips(inst, mg)
        self.Z: Set[int] = set()
        self.trace: List[TraceEntry] = []
        self._ancestors = {mu: mg.ancestors(mu) for mu in mg}
        self._drivers_at: Dict[str, Set[int]] = {mu: set() for mu in mg}
        self._idle_at: Dict[str, Set[int]] = {mu: set() for mu in mg}
        for i in self.X:
            self._idle_at[mg.node(i)].add(i)
        shapes = {}
        self._shape = {t.id: shapes.setdefault(route_shape(t), len(shapes)) for t in inst}
        self._reach: Dict[Tuple[int, int], bool] = {}

    # queries

    def _route_serves(self, x, t) -> bool:
        key = self._shape[x], self._shape[t]
        if key not in self._reach:
            self._reach[key] = route_serves(self.inst, x, t)
        return self._reach[key]

    def carries(self, x, trips) -> List[int]:
        """The trips among `trips` that x's route picks up and delivers (seats and stops aside)."""
        return [t for t in trips if t != x and self._route_serves(x, t)]

    def served(self, i) -> bool:
        return i in self.owner

    def unserved(self, ids):
        return sorted(i for i in ids if i not in self.owner)

    def is_driver(self, i) -> bool:
        return i in self.sigma

    def delta(self, i) -> int:
        return self.inst.trip(i).stop_limit

    def seats(self, i) -> int:
        """free(i) for drivers, n_i for trips not yet assigned."""
        return self.free[i]

    def active_drivers(self, nodes, mu, strict_stop=False):
        """Drivers at `nodes` with a free seat that may stop at `mu`.

        With strict_stop the driver needs a spare stop even when it starts at `mu`.
        """
        found = []
        for nu in nodes:
            for i in self._drivers_at[nu]:
                if self.free[i] <= 0:
                    continue
                if self.stop[i] < self.delta(i) or (not strict_stop and nu == mu):
                    found.append(i)
        return found

    def idle_candidates(self, mu):
        """X-bar: unassigned X trips on A*_mu with a spare stop, or starting at mu."""
        found = []
        for nu in self._ancestors[mu] | {mu}:
            for i in self._idle_at[nu]:
                if nu == mu or self.stop[i] < self.delta(i):
                    found.append(i)
        return found

    # updates

    def make_driver(self, x, phase):
        if self.served(x):
            raise InvariantBreach(f'Trip {x} is already served and cannot become a driver')
        self.sigma[x] = {x}
        self.owner[x] = x
        mu = self.mg.node(x)
        self._drivers_at[mu].add(x)
        self._idle_at[mu].discard(x)
        self._record(phase, x, ())

    def serve(self, x, trips, phase):
        """x serves `trips` (all at one node); free and stop are updated."""
        if not trips:
            return
        x_node = self.mg.node(x)
        nodes = {self.mg.node(t) for t in trips}
        if len(trips) > self.free[x]:
            raise InvariantBreach(f'Driver {x} has {self.free[x]} seats for {len(trips)} trips')
        for t in trips:
            if self.served(t):
                raise InvariantBreach(f'Trip {t} is already served')
            self.sigma[x].add(t)
            self.owner[t] = x
            self._idle_at[self.mg.node(t)].discard(t)
        before = self.stop[x]
        stopped_at = {self.mg.node(t) for t in self.sigma[x]} - {x_node}
        self.stop[x] = len(stopped_at)
        if self.stop[x] > self.delta(x):
            raise InvariantBreach(f'Driver {x} exceeds its stop limit at {sorted(nodes)}')
        if self.stop[x] < before:
            raise InvariantBreach(f'Stop count of {x} decreased')
        self._record(phase, x, tuple(sorted(trips)))

    def _record(self, phase, x, served):
        free = self.inst.trip(x).capacity - len(self.sigma[x]) + 1
        if free > self.free[x]:
            raise InvariantBreach(f'free({x}) increased from {self.free[x]} to {free}')
        if free < 0:
            raise InvariantBreach(f'free({x}) is negative')
        self.free[x] = free
        entry = TraceEntry(phase, x, served, free, self.stop[x])
        self.trace.append(entry)
        logger.debug(f'Phase {phase}: driver {x} serves {list(served)} (free={free}, stop={self.stop[x]})')

    def check_covered(self, ids, what):
        missing = self.unserved(ids)
        if missing:
            raise InvariantBreach(f'{what} not covered: {missing[:10]}')

    def to_solution(self) -> Solution:
        return Solution.from_served(self.inst, self.sigma)


def partition_trips(inst: Instance, mg: MetaGraph):
    """W: trips that can only serve themselves; X: the rest."""
    W = set()
    for t in inst:
        if t.capacity == 0:
            W.add(t.id)
        elif t.stop_limit == 0 and len(mg.trips(mg.node(t.id))) == 1:
            W.add(t.id)
    return W, set(inst.ids) - W


def _pick(candidates, key):
    return min(candidates, key=lambda i: (key(i), i))


def phase1(state: PhaseState) -> PhaseState:
    """Serve W, preferring drivers from X over solo W drivers."""
    mg = state.mg
    left = {}
    for w in state.W:
        left.setdefault(mg.node(w), set()).add(w)
    while left:
        mu = max(left, key=lambda nu: (len(left[nu]), mg.label(nu)))
        waiting = sorted(left[mu])
        candidates = set(state.active_drivers(state._ancestors[mu], mu, strict_stop=True))
        candidates.update(state.idle_candidates(mu))
        carried = {x: state.carries(x, waiting) for x in candidates}
        candidates = [x for x in candidates if carried[x]]
        if candidates:
            spare = {x: state.delta(x) - state.stop[x] for x in candidates}
            fitting = [x for x in candidates if state.seats(x) >= len(carried[x])]
            if fitting:
                x = _pick(fitting, lambda i: spare[i])
            else:
                x = _pick(candidates, lambda i: (-state.seats(i), spare[i]))
            if not state.is_driver(x):
                state.make_driver(x, 1)
            state.serve(x, carried[x][:state.free[x]], 1)
        else:
            for w in waiting:
                state.make_driver(w, 1)
        left[mu] = {w for w in left[mu] if not state.served(w)}
        if not left[mu]:
            del left[mu]
    state.check_covered(state.W, 'W after phase 1')
    return state


def phase2(state: PhaseState) -> PhaseState:
    """Serve the remaining zero-stop trips Z."""
    mg = state.mg
    state.Z = {i for i in state.inst.ids if not state.served(i) and state.delta(i) == 0}
    by_node = {}
    for z in state.Z:
        by_node.setdefault(mg.node(z), set()).add(z)
    order = [mu for mu in mg.in_label_order() if mu in by_node]
    for mu in order:
        while True:
            group = state.unserved(by_node[mu])
            if len(group) < 2:
                break
            x = _pick(group, lambda i: -state.inst.trip(i).capacity)
            state.make_driver(x, 2)
            rest = sorted(state.carries(x, group), key=lambda i: (state.inst.trip(i).capacity, i))
            state.serve(x, rest[:state.free[x]], 2)
    for mu in order:
        group = state.unserved(by_node[mu])
        if not group:
            continue
        z = group[0]
        drivers = [x for x in state.active_drivers(state._ancestors[mu] | {mu}, mu) if state.carries(x, [z])]
        if drivers:
            x = _pick(drivers, lambda i: -state.free[i])
        else:
            idle = [i for i in state.idle_candidates(mu) if i == z or state.carries(i, [z])]
            x = _pick(idle, lambda i: -state.delta(i))
            state.make_driver(x, 2)
        if x != z:
            state.serve(x, [z], 2)
    state.check_covered(state.W | state.Z, 'W and Z after phase 2')
    return state


def phase3(state: PhaseState) -> Solution:
    """Serve every remaining trip, node by node from the largest label down."""
    mg = state.mg
    for mu in mg.in_label_order():
        while True:
            waiting = state.unserved(mg.trips(mu))
            if not waiting:
                break
            drivers = [x for x in state.active_drivers(state._ancestors[mu] | {mu}, mu)
                       if state.carries(x, waiting)]
            if drivers:
                x = _pick(drivers, lambda i: -state.free[i])
            else:
                idle = [i for i in waiting if i in state.X]
                if not idle:
                    raise InvariantBreach(f'No candidate driver for {waiting} at {mu}')
                x = _pick(idle, lambda i: (-state.inst.trip(i).capacity, state.delta(i)))
                state.make_driver(x, 3)
            state.serve(x, state.carries(x, waiting)[:state.free[x]], 3)
    state.check_covered(state.inst.ids, 'R after phase 3')
    return state.to_solution()


def check_phase_preconditions(inst: Instance) -> MetaGraph:
    """Return the labeled meta graph, or raise PreconditionError naming what failed."""
    violated = inst.condition_flags.violated(1, 2, 3, 5)
    if violated:
        raise PreconditionError(violated[0], f'condition {violated[0]} does not hold'
                                             f' (conditions {inst.condition_flags})')
    check_uniform_nodes(inst)
    return label_nodes(build_meta_graph(inst))


def check_uniform_nodes(inst: Instance):
    """Trips sharing a source must share the destination and preferred paths.

    Otherwise a meta graph arc promises more than some trips of its tail node deliver.
    """
    first = {}
    for trip in inst:
        route = trip.destination, trip.preferred_paths
        other, other_route = first.setdefault(trip.source, (trip.id, route))
        if other_route != route:
            raise PreconditionError('uniform-nodes', f'trips {other} and {trip.id} start at {trip.source}'
                                                     f' but follow different routes')


def solve_phases(inst: Instance, *, trace: Optional[list] = None) -> Solution:
    """Three-phase (K+2)/2-approximation of the minimum number of drivers.

    :param trace: if given, extended with one TraceEntry per assignment
    """
    start = time.time()
    mg = check_phase_preconditions(inst)
    state = PhaseState(inst, mg)
    phase1(state)
    phase2(state)
    sol = phase3(state)
    if trace is not None:
        trace.extend(state.trace)
    logger.info(f'Phases: {len(sol)} drivers for {len(inst)} trips on {len(mg)} nodes'
                f' ({time.time() - start:.2f}s)')
    return sol
