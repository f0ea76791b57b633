"""
Small instance builders for tests.

Trips are given as ``(path, capacity, stop_limit)`` or dicts of Trip keyword
arguments with a ``path`` entry; ids are assigned in order from 1. Unless
stated otherwise every edge has length 1 and every trip shares the window
[0, 100].
"""
from typing import Iterable, Sequence, Tuple, Union

from ridemin.model.instance import Instance
from ridemin.model.network import RoadNetwork
from ridemin.model.trip import Trip

WINDOW = (0, 100)


def make_trip(trip_id, path: Sequence[str], capacity=1, stop_limit=1, *, detour_limit=0,
              window=WINDOW, paths=None) -> Trip:
    paths = paths or (tuple(path),)
    return Trip(trip_id, path[0], path[-1], capacity, detour_limit, tuple(paths),
                stop_limit, window[0], window[1])


def network_from_paths(paths: Iterable[Sequence[str]], length=1, edges=()) -> RoadNetwork:
    """Union of the edges along `paths`, each of `length`, plus explicit `edges`."""
    seen = {}
    for u, v, w in edges:
        seen[frozenset((u, v))] = (u, v, w)
    for path in paths:
        for u, v in zip(path, path[1:]):
            seen.setdefault(frozenset((u, v)), (u, v, length))
    return RoadNetwork.from_edges(seen.values())


def build_instance(trips: Sequence[Union[Tuple, dict]], *, edges=(), name='test') -> Instance:
    built = []
    for trip_id, spec in enumerate(trips, start=1):
        if isinstance(spec, dict):
            spec = dict(spec)
            built.append(make_trip(trip_id, spec.pop('path'), **spec))
        else:
            built.append(make_trip(trip_id, *spec))
    network = network_from_paths((p for t in built for p in t.preferred_paths), edges=edges)
    return Instance(network, tuple(built), name=name)


def chain_instance(capacities: Sequence[int], stop_limits: Sequence[int] = None, name='chain') -> Instance:
    """One trip per vertex of a chain c_1 - c_2 - ... - c_k - D, trip i starting at c_i.

    Trip 1 is furthest from D, so it can serve every later trip.
    """
    k = len(capacities)
    stop_limits = stop_limits or [k] * k
    chain = [f'c{i}' for i in range(1, k + 1)] + ['D']
    return build_instance([(chain[i:], n, s) for i, (n, s) in enumerate(zip(capacities, stop_limits))], name=name)


def same_source_instance(capacities: Sequence[int], stop_limit=0, name='one-node') -> Instance:
    """Every trip drives x -> D."""
    return build_instance([(('x', 'D'), n, stop_limit) for n in capacities], name=name)
