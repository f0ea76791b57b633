import pytest

from ridemin.errors import SpecError, UnknownTripError, UnknownVertexError
from ridemin.gen import ThreePartitionSpec, gen_3partition_stop, gen_3partition_time
from ridemin.model import Conditions, Instance, check_conditions
from ridemin.pytest_utils import build_instance, make_trip, network_from_paths, same_source_instance

YES = ThreePartitionSpec(2, 7, (2, 2, 3, 2, 2, 3))


def test_conditions_stop_gadget():
    flags = check_conditions(gen_3partition_stop(YES))
    assert str(flags) == 'TTTFT'
    assert flags.violated() == [4]
    assert flags.violated(1, 2, 3) == []


def test_conditions_time_gadget():
    assert str(check_conditions(gen_3partition_time(YES))) == 'TTTTF'


def test_conditions_single_trip():
    inst = build_instance([(('a', 'D'), 1, 1)])
    assert str(inst.condition_flags) == 'TTTTT'


@pytest.mark.parametrize('trips, expected', [
    ([(('a', 'D'), 0, 0), (('b', 'E'), 0, 0)], 'FTTTT'),
    ([(('a', 'D'), 0, 0), {'path': ('b', 'D'), 'capacity': 0, 'stop_limit': 0, 'detour_limit': 1}], 'TFTTT'),
    ([(('a', 'D'), 2, 1)], 'TTTFT'),
    ([(('a', 'D'), 0, 0), {'path': ('b', 'D'), 'capacity': 0, 'stop_limit': 0, 'window': (0, 5)}], 'TTTTF'),
])
def test_each_condition(trips, expected):
    assert str(build_instance(trips).condition_flags) == expected


def test_same_source_counts_as_condition_one():
    inst = build_instance([(('x', 'a'), 0, 0), (('x', 'b'), 0, 0)])
    assert inst.condition_flags.same_endpoint


def test_multiple_paths_break_condition_three():
    inst = build_instance([{'path': ('a', 'b', 'D'), 'paths': [('a', 'b', 'D'), ('a', 'c', 'D')]}])
    assert str(inst.condition_flags) == 'TTFTT'


def test_declared_flags_must_match():
    inst = same_source_instance([1, 1])
    with pytest.raises(SpecError):
        Instance(inst.network, inst.trips, condition_flags=Conditions(True, True, True, True, False))
    again = Instance(inst.network, inst.trips, condition_flags=inst.condition_flags)
    assert again.condition_flags == inst.condition_flags


def test_trip_ids_contiguous():
    net = network_from_paths([('a', 'D')])
    with pytest.raises(SpecError):
        Instance(net, (make_trip(1, ('a', 'D')), make_trip(3, ('a', 'D'))))


def test_unknown_vertex_in_trip():
    net = network_from_paths([('a', 'D')])
    with pytest.raises(UnknownVertexError):
        Instance(net, (make_trip(1, ('z', 'D')),))


def test_preferred_path_must_exist():
    net = network_from_paths([('a', 'b'), ('b', 'D')])
    with pytest.raises(SpecError):
        Instance(net, (make_trip(1, ('a', 'D')),))


def test_trip_lookup():
    inst = same_source_instance([0, 2, 1])
    assert inst[2].capacity == 2
    assert list(inst.ids) == [1, 2, 3]
    assert inst.max_capacity == 2
    assert inst.ratio_bound() == 2
    with pytest.raises(UnknownTripError):
        inst.trip(4)


@pytest.mark.parametrize('kwargs', [
    {'capacity': -1},
    {'stop_limit': -2},
    {'window': (5, 5)},
])
def test_trip_rejects_bad_parameters(kwargs):
    with pytest.raises(SpecError):
        make_trip(1, ('a', 'D'), **kwargs)


def test_trip_path_endpoints():
    with pytest.raises(SpecError):
        make_trip(1, ('a', 'D'), paths=[('a', 'b')])
