import pytest

from ridemin.errors import SpecError, UnknownTripError
from ridemin.gen import ThreePartitionSpec, gen_3partition_stop, gen_3partition_time
from ridemin.model import (can_serve, cheapest_schedule, count_stops, feasible_schedule, infeasibility_kind,
                           route_serves)
from ridemin.model.solution import Solution, validate_solution
from ridemin.pytest_utils import build_instance, chain_instance

YES = ThreePartitionSpec(2, 7, (2, 2, 3, 2, 2, 3))


@pytest.fixture(scope='module')
def stop_gadget():
    return gen_3partition_stop(YES)


@pytest.fixture(scope='module')
def time_gadget():
    return gen_3partition_time(YES)


@pytest.mark.parametrize('i, j, exp', [
    (1, 1, True),
    (1, 7, True),
    (1, 14, True),
    (7, 1, False),
    (7, 14, False),  # no seats
    (2, 1, False),
])
def test_can_serve_stop_gadget(stop_gadget, i, j, exp):
    assert can_serve(stop_gadget, i, j) is exp


def test_route_serves_ignores_seats(stop_gadget):
    assert not can_serve(stop_gadget, 7, 14)
    assert route_serves(stop_gadget, 7, 14)
    assert not route_serves(stop_gadget, 14, 7)


def test_unknown_trip(stop_gadget):
    with pytest.raises(UnknownTripError):
        can_serve(stop_gadget, 1, 99)


def test_driver_among_passengers(stop_gadget):
    with pytest.raises(SpecError):
        feasible_schedule(stop_gadget, 1, {1, 7})


def test_empty_plan(stop_gadget):
    plan = feasible_schedule(stop_gadget, 1, ())
    assert plan.pickups == ()
    assert plan.route == ('u1', 'v1', 'v2', 'D')
    assert plan.distance == 3


@pytest.mark.parametrize('passengers, exp', [
    ((), 0),
    ((7, 8), 1),
    ((7, 8, 14), 2),
])
def test_count_stops(stop_gadget, passengers, exp):
    assert count_stops(stop_gadget, 1, passengers) == exp


def test_same_source_costs_no_stop():
    inst = build_instance([(('x', 'D'), 2, 0), (('x', 'D'), 0, 0), (('x', 'D'), 0, 0)])
    assert count_stops(inst, 1, (2, 3)) == 0
    plan = feasible_schedule(inst, 1, (2, 3))
    assert plan is not None
    assert plan.stop_count('x') == 0


def test_stop_limit(stop_gadget):
    assert feasible_schedule(stop_gadget, 1, (7, 8)) is not None
    assert feasible_schedule(stop_gadget, 1, (7, 14)) is None
    assert feasible_schedule(stop_gadget, 1, (7, 14), limits=False) is not None


def test_time_gadget_pickup_waits(time_gadget):
    plan = feasible_schedule(time_gadget, 1, (7,))
    assert plan is not None
    pickup, = plan.pickups
    assert pickup.vertex == 'v1'
    assert pickup.time == 2
    assert plan.arrive == 4


def test_time_gadget_mixed_sources_infeasible(time_gadget):
    assert time_gadget.trip(14).arrive_latest == 3
    assert feasible_schedule(time_gadget, 1, (14,)) is not None
    assert feasible_schedule(time_gadget, 1, (7, 14)) is None
    assert infeasibility_kind(time_gadget, 1, (7, 14)) == 'time'


@pytest.mark.parametrize('driver, passengers, exp', [
    (7, (8,), 'capacity'),
    (1, (2,), 'path'),
    (1, (7, 14), 'stops'),
    (1, (7,), None),
])
def test_infeasibility_kind(stop_gadget, driver, passengers, exp):
    assert infeasibility_kind(stop_gadget, driver, passengers) == exp


def _detour_instance(detour):
    return build_instance([
        {'path': ('a', 'b', 'D'), 'capacity': 1, 'stop_limit': 1, 'detour_limit': detour},
        {'path': ('x', 'b', 'D'), 'capacity': 0, 'stop_limit': 0},
    ])


def test_detour_within_limit():
    inst = _detour_instance(2)
    plan = feasible_schedule(inst, 1, (2,))
    assert plan is not None
    assert plan.route == ('a', 'b', 'x', 'b', 'D')
    assert plan.distance == 4
    assert validate_solution(inst, Solution.from_served(inst, {1: {2}})).valid


def test_detour_over_limit():
    inst = _detour_instance(1)
    assert feasible_schedule(inst, 1, (2,)) is None
    assert infeasibility_kind(inst, 1, (2,)) == 'detour'


def test_zero_detour_needs_source_on_path():
    inst = _detour_instance(0)
    assert infeasibility_kind(inst, 1, (2,)) == 'path'


def test_passenger_window():
    inst = build_instance([
        (('a', 'b', 'D'), 1, 1),
        {'path': ('b', 'D'), 'capacity': 0, 'stop_limit': 0, 'window': (0, 1)},
    ])
    assert not can_serve(inst, 1, 2)
    assert infeasibility_kind(inst, 1, (2,)) == 'time'


def test_can_serve_matches_schedule():
    inst = chain_instance([2, 1, 0])
    for i in inst.ids:
        for j in inst.ids:
            if i != j:
                assert can_serve(inst, i, j) is (feasible_schedule(inst, i, (j,)) is not None)


def test_count_stops_monotone():
    inst = chain_instance([3, 1, 0, 0])
    assert count_stops(inst, 1, (2,)) <= count_stops(inst, 1, (2, 3)) <= count_stops(inst, 1, (2, 3, 4))


def test_cheapest_schedule_over_paths():
    inst = build_instance([
        {'path': ('a', 'b', 'D'), 'paths': [('a', 'b', 'D'), ('a', 'D')]},
        (('b', 'D'), 0, 0),
    ])
    assert feasible_schedule(inst, 1, ()).distance == 2
    assert cheapest_schedule(inst, 1, ()).route == ('a', 'D')
    assert cheapest_schedule(inst, 1, (2,)).route == ('a', 'b', 'D')
    assert cheapest_schedule(inst, 2, (1,)) is None
