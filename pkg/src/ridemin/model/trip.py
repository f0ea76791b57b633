from dataclasses import dataclass
from typing import FrozenSet, Optional, Tuple

from ridemin.errors import SpecError
from ridemin.model.network import Vertex

Path = Tuple[Vertex, ...]


@dataclass(frozen=True)
class Trip:
    """One ridesharing request: an individual, a vehicle and eight parameters.

    :param id: integer label, 1..l within an instance
    :param source: start vertex (s_i)
    :param destination: end vertex (t_i)
    :param capacity: seats available for passengers (n_i)
    :param detour_limit: extra distance the driver accepts (d_i)
    :param preferred_paths: source-to-destination vertex sequences (P_i)
    :param stop_limit: pickup stops the driver accepts (delta_i)
    :param depart_earliest: earliest departure time (alpha_i)
    :param arrive_latest: latest arrival time (beta_i)
    """
    id: int
    source: Vertex
    destination: Vertex
    capacity: int
    detour_limit: int
    preferred_paths: Tuple[Path, ...]
    stop_limit: int
    depart_earliest: int
    arrive_latest: int

    def __post_init__(self):
        object.__setattr__(self, 'preferred_paths', tuple(tuple(p) for p in self.preferred_paths))
        for name in ('capacity', 'detour_limit', 'stop_limit'):
            value = getattr(self, name)
            if not isinstance(value, int) or value < 0:
                raise SpecError(f'Trip {self.id}: {name} must be a non-negative integer, got {value!r}')
        if not self.depart_earliest < self.arrive_latest:
            raise SpecError(f'Trip {self.id}: depart_earliest ({self.depart_earliest})'
                            f' must precede arrive_latest ({self.arrive_latest})')
        if not self.preferred_paths:
            raise SpecError(f'Trip {self.id}: at least one preferred path is required')
        for path in self.preferred_paths:
            if path[0] != self.source or path[-1] != self.destination:
                raise SpecError(f'Trip {self.id}: preferred path {" ".join(path)}'
                                f' must run from {self.source} to {self.destination}')

    @property
    def window(self):
        return self.depart_earliest, self.arrive_latest

    def attributes(self):
        """Everything except the id; trips with equal attributes are interchangeable."""
        return (self.source, self.destination, self.capacity, self.detour_limit,
                self.preferred_paths, self.stop_limit, self.depart_earliest, self.arrive_latest)


@dataclass(frozen=True)
class Pickup:
    """Passengers boarding at `route[index]` at `time`."""
    index: int
    vertex: Vertex
    time: int
    passengers: FrozenSet[int]


@dataclass(frozen=True)
class PickupPlan:
    """How a driver serves its passengers.

    `route` is the vertex sequence actually driven (the chosen preferred path
    when the detour limit is zero). Pickups are in route order; a pickup at the
    driver's own source is not a stop.
    """
    driver: int
    path_index: int
    route: Path
    depart: int
    arrive: int
    distance: int
    pickups: Tuple[Pickup, ...] = ()

    @property
    def passengers(self) -> FrozenSet[int]:
        return frozenset(p for pickup in self.pickups for p in pickup.passengers)

    def stop_count(self, source: Optional[Vertex] = None) -> int:
        return sum(1 for pickup in self.pickups if pickup.vertex != source)
