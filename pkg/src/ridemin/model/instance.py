from dataclasses import dataclass, field
from typing import Dict, Iterator, NamedTuple, Optional, Sequence, Tuple

from ridemin.errors import SpecError, UnknownTripError, UnknownVertexError
from ridemin.model.network import RoadNetwork, is_simple_path
from ridemin.model.trip import Trip


class Conditions(NamedTuple):
    """The five structural conditions an instance may satisfy."""
    same_endpoint: bool  # (1) common destination or common source
    zero_detour: bool  # (2)
    fixed_path: bool  # (3)
    stops_cover_capacity: bool  # (4) delta_i >= n_i
    common_window: bool  # (5)

    def violated(self, *numbers):
        """Condition numbers (1-based) among `numbers` that do not hold."""
        return [n for n in numbers or range(1, 6) if not self[n - 1]]

    def __str__(self):
        return ''.join('T' if flag else 'F' for flag in self)


def check_conditions(inst: 'Instance') -> Conditions:
    return _conditions(inst.trips)


def _conditions(trips: Sequence[Trip]) -> Conditions:
    return Conditions(
        same_endpoint=len({t.destination for t in trips}) <= 1 or len({t.source for t in trips}) <= 1,
        zero_detour=all(t.detour_limit == 0 for t in trips),
        fixed_path=all(len(t.preferred_paths) == 1 for t in trips),
        stops_cover_capacity=all(t.stop_limit >= t.capacity for t in trips),
        common_window=len({t.window for t in trips}) <= 1,
    )


@dataclass(frozen=True)
class Instance:
    """A road network and the trip set R = {1..l}."""
    network: RoadNetwork
    trips: Tuple[Trip, ...]
    condition_flags: Optional[Conditions] = None
    name: str = ''
    _by_id: Dict[int, Trip] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        trips = tuple(sorted(self.trips, key=lambda t: t.id))
        object.__setattr__(self, 'trips', trips)
        ids = [t.id for t in trips]
        if ids != list(range(1, len(trips) + 1)):
            raise SpecError(f'Trip ids must be distinct and contiguous from 1, got {ids[:10]}...')
        for trip in trips:
            for vertex in (trip.source, trip.destination):
                if vertex not in self.network:
                    raise UnknownVertexError(vertex)
            for path in trip.preferred_paths:
                if not is_simple_path(self.network, path):
                    raise SpecError(f'Trip {trip.id}: preferred path {" ".join(path)}'
                                    f' is not a simple path in the network')
        flags = _conditions(trips)
        if self.condition_flags is not None and tuple(self.condition_flags) != tuple(flags):
            raise SpecError(f'Declared condition flags {Conditions(*self.condition_flags)}'
                            f' do not match the trips ({flags})')
        object.__setattr__(self, 'condition_flags', flags)
        object.__setattr__(self, '_by_id', {t.id: t for t in trips})

    def __len__(self):
        return len(self.trips)

    def __iter__(self) -> Iterator[Trip]:
        return iter(self.trips)

    def __getitem__(self, trip_id) -> Trip:
        return self.trip(trip_id)

    def trip(self, trip_id) -> Trip:
        try:
            return self._by_id[trip_id]
        except (KeyError, TypeError):
            raise UnknownTripError(trip_id)

    @property
    def ids(self):
        return range(1, len(self.trips) + 1)

    @property
    def max_capacity(self) -> int:
        """K: the largest vehicle capacity."""
        return max((t.capacity for t in self.trips), default=0)

    def ratio_bound(self) -> float:
        """(K + 2) / 2, the approximation guarantee of the driver-minimizing solvers."""
        return (self.max_capacity + 2) / 2
