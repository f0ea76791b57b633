"""
Serve feasibility: can a driver carry a set of passengers within its seats,
stops, detour, and the time windows of everyone on board?

Distances and times share one integer unit (speed 1). Drivers may wait at any
vertex. A stop is a pickup at a vertex other than the driver's own source;
drop-offs are free.
"""
import itertools
from typing import Dict, Iterable, List, Optional, Sequence

import networkx as nx

from ridemin.errors import SpecError
from ridemin.model.instance import Instance
from ridemin.model.network import path_length
from ridemin.model.trip import Pickup, PickupPlan, Trip
from ridemin.util import natural_key

# pickup orders are searched exhaustively only up to this many passengers
MAX_DETOUR_PASSENGERS = 8


def count_stops(inst: Instance, driver: int, passengers: Iterable[int]) -> int:
    """Distinct pickup sources among `passengers`, not counting the driver's own."""
    source = inst.trip(driver).source
    return len({inst.trip(p).source for p in passengers} - {source})


def feasible_schedule(inst: Instance, driver: int, passengers: Iterable[int], *,
                      limits=True) -> Optional[PickupPlan]:
    """Find a pickup plan for `driver` carrying `passengers`, or None.

    :param limits: when False, seat and stop limits are ignored (route and
        time feasibility only)
    """
    d = inst.trip(driver)
    riders = _riders(inst, d, passengers, limits)
    if riders is None:
        return None
    return _find_plan(inst, d, riders)


def cheapest_schedule(inst: Instance, driver: int, passengers: Iterable[int]) -> Optional[PickupPlan]:
    """The feasible pickup plan of least distance, or None.

    Every preferred path is tried, and every pickup order along shortest legs
    when the driver may detour.
    """
    d = inst.trip(driver)
    riders = _riders(inst, d, passengers, limits=True)
    if riders is None:
        return None
    plans = [_along_path(inst, d, index, path, riders, True) for index, path in enumerate(d.preferred_paths)]
    if d.detour_limit > 0:
        plans.append(_with_detour(inst, d, riders, True))
    return min((p for p in plans if p is not None), key=lambda p: (p.distance, p.path_index), default=None)


def _riders(inst, d: Trip, passengers, limits) -> Optional[List[Trip]]:
    riders = [inst.trip(p) for p in sorted(set(passengers))]
    if any(t.id == d.id for t in riders):
        raise SpecError(f'Driver {d.id} cannot be listed among its own passengers')
    if limits:
        if len(riders) > d.capacity:
            return None
        if count_stops(inst, d.id, (t.id for t in riders)) > d.stop_limit:
            return None
    return riders


def can_serve(inst: Instance, i: int, j: int) -> bool:
    if i == j:
        inst.trip(i)
        return True
    return feasible_schedule(inst, i, (j,)) is not None


def route_serves(inst: Instance, i: int, j: int) -> bool:
    """The serve relation with seat and stop limits ignored."""
    if i == j:
        inst.trip(i)
        return True
    return feasible_schedule(inst, i, (j,), limits=False) is not None


def infeasibility_kind(inst: Instance, driver: int, passengers: Iterable[int]) -> Optional[str]:
    """Name the first constraint that rules out `driver` serving `passengers`.

    Returns one of 'capacity', 'stops', 'path', 'detour', 'time' or None when
    the set is feasible.
    """
    d = inst.trip(driver)
    riders = [inst.trip(p) for p in sorted(set(passengers) - {driver})]
    if len(riders) > d.capacity:
        return 'capacity'
    if count_stops(inst, driver, (t.id for t in riders)) > d.stop_limit:
        return 'stops'
    if _find_plan(inst, d, riders, timed=False) is None:
        return 'path' if d.detour_limit == 0 else 'detour'
    if _find_plan(inst, d, riders) is None:
        return 'time'
    return None


def _find_plan(inst, d: Trip, riders: Sequence[Trip], timed=True) -> Optional[PickupPlan]:
    for index, path in enumerate(d.preferred_paths):
        plan = _along_path(inst, d, index, path, riders, timed)
        if plan is not None:
            return plan
    if d.detour_limit > 0:
        return _with_detour(inst, d, riders, timed)
    return None


def _along_path(inst, d: Trip, index, path, riders, timed):
    position = {vertex: k for k, vertex in enumerate(path)}
    pickups_at: Dict[int, List[Trip]] = {}
    for t in riders:
        if t.source not in position:
            return None
        pickups_at.setdefault(position[t.source], []).append(t)
    return _simulate(inst, d, index, path, pickups_at, timed)


def _with_detour(inst, d: Trip, riders, timed):
    """Visit pickup sources in every order, travelling shortest legs between them."""
    if len(riders) > MAX_DETOUR_PASSENGERS:
        return None
    net = inst.network
    sources = sorted({t.source for t in riders} - {d.source}, key=natural_key)
    by_source = {}
    for t in riders:
        by_source.setdefault(t.source, []).append(t)
    budget = max(path_length(net, p) for p in d.preferred_paths) + d.detour_limit
    best = None
    for order in itertools.permutations(sources):
        waypoints = [d.source, *order, d.destination]
        route = [d.source]
        pickups_at = {0: by_source[d.source]} if d.source in by_source else {}
        try:
            for u, v in zip(waypoints, waypoints[1:]):
                route.extend(net.shortest_path(u, v)[1:])
                if v in by_source and v != d.source:
                    pickups_at[len(route) - 1] = by_source[v]
        except nx.NetworkXNoPath:
            continue
        if path_length(net, route) > budget:
            continue
        plan = _simulate(inst, d, _closest_path(inst, d, route), route, pickups_at, timed)
        if plan is not None and (best is None or plan.distance < best.distance):
            best = plan
    return best


def _closest_path(inst, d: Trip, route):
    """Index of the preferred path the detour is measured against."""
    length = path_length(inst.network, route)
    for index, path in enumerate(d.preferred_paths):
        if length <= path_length(inst.network, path) + d.detour_limit:
            return index
    return 0


def _simulate(inst, d: Trip, path_index, route, pickups_at, timed) -> Optional[PickupPlan]:
    net = inst.network
    time = d.depart_earliest
    depart = time
    arrivals = []
    pickups = []
    boarded = {}
    for k, vertex in enumerate(route):
        if k:
            time += net.length(route[k - 1], vertex)
        arrivals.append(time)
        group = pickups_at.get(k)
        if group:
            if timed:
                time = max(time, max(t.depart_earliest for t in group))
            pickups.append(Pickup(k, vertex, time, frozenset(t.id for t in group)))
            for t in group:
                boarded[t.id] = (k, time)
        if k == 0:
            depart = time
    for group in pickups_at.values():
        for t in group:
            k, picked = boarded[t.id]
            try:
                drop = route.index(t.destination, k)
            except ValueError:
                return None
            arrive = arrivals[drop] if drop > k else picked
            if timed and arrive > t.arrive_latest:
                return None
    if timed and arrivals[-1] > d.arrive_latest:
        return None
    return PickupPlan(
        driver=d.id,
        path_index=path_index,
        route=tuple(route),
        depart=depart,
        arrive=arrivals[-1],
        distance=path_length(net, route),
        pickups=tuple(pickups),
    )
