"""
Random instances on tree-shaped road networks that merge toward one destination.

Node n1 is joined to D and every later node n_k hangs off an earlier one, so
the source nodes form an inverse tree with sink n1. Each trip drives the
unique tree path to D, all trips share one time window, and every node holds
at least one trip: the route relation is transitive and the simplified meta
graph is the tree itself.
"""
import random
from dataclasses import dataclass
from typing import Optional

from loguru import logger

from ridemin.errors import SpecError
from ridemin.model.instance import Instance
from ridemin.model.network import RoadNetwork
from ridemin.model.trip import Trip

DESTINATION = 'D'


@dataclass(frozen=True)
class RandomTreeSpec:
    """
    :param trips: l, number of trips
    :param nodes: p, number of source vertices (default: about one per ten trips)
    :param max_capacity: capacities are drawn from [min_capacity..max_capacity]
    :param max_stops: stop limits are drawn from [min_stops..max_stops]
    :param max_edge_length: edge lengths are drawn from [1..max_edge_length]
    :param branching: chance that a new node attaches to a random earlier node
        rather than the previous one; 0 gives a chain
    """
    trips: int
    nodes: Optional[int] = None
    min_capacity: int = 0
    max_capacity: int = 3
    min_stops: int = 0
    max_stops: int = 2
    max_edge_length: int = 3
    branching: float = 0.7
    seed: int = 0

    def __post_init__(self):
        if self.nodes is None:
            object.__setattr__(self, 'nodes', max(1, self.trips // 10))
        if self.nodes < 1 or self.trips < self.nodes:
            raise SpecError(f'spec: need trips >= nodes >= 1, got trips={self.trips}, nodes={self.nodes}')
        if not 0 <= self.min_capacity <= self.max_capacity:
            raise SpecError(f'spec: invalid capacity range [{self.min_capacity}..{self.max_capacity}]')
        if not 0 <= self.min_stops <= self.max_stops:
            raise SpecError(f'spec: invalid stop range [{self.min_stops}..{self.max_stops}]')
        if self.max_edge_length < 1:
            raise SpecError(f'spec: max_edge_length must be positive, got {self.max_edge_length}')
        if not 0 <= self.branching <= 1:
            raise SpecError(f'spec: branching must lie in [0, 1], got {self.branching}')

    @property
    def name(self):
        return f'random_l{self.trips}_p{self.nodes}_s{self.seed}'


def gen_random_tree(spec: RandomTreeSpec) -> Instance:
    rng = random.Random(spec.seed)
    parent = {'n1': DESTINATION}
    edges = [('n1', DESTINATION, rng.randint(1, spec.max_edge_length))]
    for k in range(2, spec.nodes + 1):
        if rng.random() < spec.branching:
            up = rng.randint(1, k - 1)
        else:
            up = k - 1
        parent[f'n{k}'] = f'n{up}'
        edges.append((f'n{k}', f'n{up}', rng.randint(1, spec.max_edge_length)))
    network = RoadNetwork.from_edges(edges)

    paths = {}
    for k in range(1, spec.nodes + 1):
        node = f'n{k}'
        path = [node]
        while path[-1] != DESTINATION:
            path.append(parent[path[-1]])
        paths[node] = tuple(path)
    horizon = sum(length for _, _, length in edges) + 1

    sources = [f'n{k}' for k in range(1, spec.nodes + 1)]
    sources += [f'n{rng.randint(1, spec.nodes)}' for _ in range(spec.trips - spec.nodes)]
    trips = []
    for trip_id, source in enumerate(sources, start=1):
        trips.append(Trip(
            trip_id, source, DESTINATION,
            capacity=rng.randint(spec.min_capacity, spec.max_capacity),
            detour_limit=0,
            preferred_paths=(paths[source],),
            stop_limit=rng.randint(spec.min_stops, spec.max_stops),
            depart_earliest=0,
            arrive_latest=horizon,
        ))
    inst = Instance(network, tuple(trips), name=spec.name)
    logger.debug(f'Generated {spec.name}: {spec.trips} trips on {spec.nodes} nodes')
    return inst
