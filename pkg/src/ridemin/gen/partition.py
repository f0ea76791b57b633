"""
Instances built from a 3-partition instance A = {a_1..a_3r}.

All gadgets share one road network: u_1..u_3r each joined to v_1, a chain
v_1 - v_2 - ... - v_r, and v_r joined to the destination D, every edge of
length 1. Trips 1..3r start at the u vertices with capacity a_i; the
remaining trips start on the chain, M per v_j, and carry nobody.
"""
import itertools
import math
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

from loguru import logger

from ridemin.errors import SpecError
from ridemin.model.instance import Instance
from ridemin.model.network import RoadNetwork
from ridemin.model.trip import Trip

DESTINATION = 'D'
MAX_SCALED_TRIPS = 100_000


@dataclass(frozen=True)
class ThreePartitionSpec:
    r: int
    M: int
    A: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, 'A', tuple(self.A))
        if self.r < 2:
            raise SpecError(f'spec: r must be at least 2, got {self.r}')
        if len(self.A) != 3 * self.r:
            raise SpecError(f'spec: expected {3 * self.r} integers, got {len(self.A)}')
        if sum(self.A) != self.r * self.M:
            raise SpecError(f'spec: sum mismatch (sum(A)={sum(self.A)}, rM={self.r * self.M})')
        for a in self.A:
            if not self.M / 4 < a < self.M / 2:
                raise SpecError(f'spec: {a} is outside ({self.M}/4, {self.M}/2)')

    @classmethod
    def parse(cls, r, M, A: str):
        """From command line text such as ``A='2,2,3,2,2,3'``."""
        try:
            values = tuple(int(a) for a in str(A).replace(' ', '').split(',') if a)
        except ValueError:
            raise SpecError(f'spec: A must be comma-separated integers, got {A!r}')
        return cls(int(r), int(M), values)

    @property
    def name(self):
        return f'r{self.r}_M{self.M}_A{"-".join(map(str, self.A))}'


def is_three_partition(spec: ThreePartitionSpec) -> Optional[Tuple[Tuple[int, ...], ...]]:
    """Split A into r triples of sum M (as index triples), or None."""
    def rec(left):
        if not left:
            return ()
        first, rest = left[0], left[1:]
        for j, k in itertools.combinations(range(len(rest)), 2):
            if spec.A[first] + spec.A[rest[j]] + spec.A[rest[k]] == spec.M:
                remaining = [x for n, x in enumerate(rest) if n not in (j, k)]
                found = rec(remaining)
                if found is not None:
                    return ((first, rest[j], rest[k]),) + found
        return None
    return rec(list(range(len(spec.A))))


def gadget_network(r: int) -> RoadNetwork:
    edges = [(f'u{i}', 'v1', 1) for i in range(1, 3 * r + 1)]
    edges += [(f'v{j}', f'v{j + 1}', 1) for j in range(1, r)]
    edges.append((f'v{r}', DESTINATION, 1))
    return RoadNetwork.from_edges(edges)


def _chain(r, j):
    return tuple(f'v{k}' for k in range(j, r + 1)) + (DESTINATION,)


def _gadget(spec: ThreePartitionSpec, *, capacity, stop_limit, window, passenger_window,
            per_source, name) -> Instance:
    r = spec.r
    trips = []
    for i, a in enumerate(spec.A, start=1):
        alpha, beta = window
        trips.append(Trip(i, f'u{i}', DESTINATION, capacity(a), 0, ((f'u{i}',) + _chain(r, 1),),
                          stop_limit(a), alpha, beta))
    next_id = 3 * r + 1
    for j in range(1, r + 1):
        alpha, beta = passenger_window(j)
        for _ in range(per_source):
            trips.append(Trip(next_id, f'v{j}', DESTINATION, 0, 0, (_chain(r, j),), 0, alpha, beta))
            next_id += 1
    inst = Instance(gadget_network(r), tuple(trips), name=name)
    logger.debug(f'Generated {name}: {len(inst)} trips, {len(inst.network.vertices)} vertices')
    return inst


def gen_3partition_stop(spec: ThreePartitionSpec, *, alpha=0, beta=None) -> Instance:
    """Stop-limit gadget: trips 1..3r have n_i = a_i and one stop; common window.

    Trip i > 3r starts at v_j with j = ceil((i - 3r) / M).
    """
    beta = 10 * spec.r if beta is None else beta
    return _gadget(spec, capacity=lambda a: a, stop_limit=lambda a: 1,
                   window=(alpha, beta), passenger_window=lambda j: (alpha, beta),
                   per_source=spec.M, name=f'3p-stop_{spec.name}')


def _scaled_count(spec, per_source):
    if per_source is None:
        per_source = spec.r * spec.M ** 2
    total = 3 * spec.r + spec.r * per_source
    return per_source, total


def gen_3partition_stop_scaled(spec: ThreePartitionSpec, *, per_source: Optional[int] = None,
                               max_trips: int = MAX_SCALED_TRIPS, alpha=0, beta=None) -> Instance:
    """Stop gadget with capacities a_i * rM.

    :param per_source: passenger trips at each v_j; default rM^2, which makes
        the total capacity (rM)^2 exactly cover them in a yes-instance
    :param max_trips: refuse to build anything larger
    """
    per_source, total = _scaled_count(spec, per_source)
    if total > max_trips:
        raise SpecError(f'spec: scaled gadget would have {total} trips (limit {max_trips})')
    beta = 10 * spec.r if beta is None else beta
    scale = spec.r * spec.M
    return _gadget(spec, capacity=lambda a: a * scale, stop_limit=lambda a: 1,
                   window=(alpha, beta), passenger_window=lambda j: (alpha, beta),
                   per_source=per_source, name=f'3p-stop-scaled_{spec.name}')


def _time_window(r):
    return lambda j: (r, 2 * r - j + 1)


def gen_3partition_time(spec: ThreePartitionSpec) -> Instance:
    """Time-window gadget: stops are unconstrained (delta_i = n_i) but a
    passenger at v_j must be picked up at time r exactly to arrive by 2r - j + 1.
    """
    r = spec.r
    return _gadget(spec, capacity=lambda a: a, stop_limit=lambda a: a,
                   window=(0, 2 * r), passenger_window=_time_window(r),
                   per_source=spec.M, name=f'3p-time_{spec.name}')


def gen_3partition_time_scaled(spec: ThreePartitionSpec, *, per_source: Optional[int] = None,
                               max_trips: int = MAX_SCALED_TRIPS) -> Instance:
    per_source, total = _scaled_count(spec, per_source)
    if total > max_trips:
        raise SpecError(f'spec: scaled gadget would have {total} trips (limit {max_trips})')
    r = spec.r
    scale = r * spec.M
    return _gadget(spec, capacity=lambda a: a * scale, stop_limit=lambda a: a * scale,
                   window=(0, 2 * r), passenger_window=_time_window(r),
                   per_source=per_source, name=f'3p-time-scaled_{spec.name}')


def passenger_source(spec: ThreePartitionSpec, trip_id: int, per_source: Optional[int] = None) -> str:
    """Source vertex v_j of passenger trip `trip_id` (> 3r)."""
    per_source = per_source or spec.M
    if trip_id <= 3 * spec.r:
        raise SpecError(f'Trip {trip_id} is not a passenger trip')
    return f'v{math.ceil((trip_id - 3 * spec.r) / per_source)}'


def yes_solution_served(spec: ThreePartitionSpec, triples: Sequence[Tuple[int, int, int]],
                        per_source: Optional[int] = None, scale: int = 1):
    """Served sets for the 3r-driver solution given a 3-partition into index triples.

    Triple j feeds the passengers at v_{j+1}, each driver taking a_i * scale of them.
    """
    per_source = per_source or spec.M
    served = {}
    for j, triple in enumerate(triples):
        start = 3 * spec.r + j * per_source + 1
        pool = list(range(start, start + per_source))
        for index in triple:
            take = spec.A[index] * scale
            served[index + 1], pool = pool[:take], pool[take:]
    return served
