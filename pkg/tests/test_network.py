import math

import pytest

from ridemin.errors import SpecError, UnknownVertexError
from ridemin.gen import gadget_network
from ridemin.model import INFINITY, RoadNetwork, is_simple_path, path_length, shortest_distance


@pytest.mark.parametrize('u, v, exp', [
    ('u1', 'u1', 0),
    ('u1', 'D', 3),
    ('v2', 'D', 1),
    ('u1', 'u2', 2),
])
def test_gadget_shortest_distance(u, v, exp):
    assert shortest_distance(gadget_network(2), u, v) == exp


def test_disconnected_is_infinite():
    net = RoadNetwork.from_edges([('a', 'b', 1)], vertices=['c'])
    assert shortest_distance(net, 'a', 'c') == INFINITY
    assert math.isinf(shortest_distance(net, 'a', 'c'))


def test_unknown_vertex():
    with pytest.raises(UnknownVertexError):
        shortest_distance(gadget_network(2), 'u1', 'zz')


@pytest.mark.parametrize('edges', [
    [('a', 'a', 1)],
    [('a', 'b', -1)],
    [('a', 'b', 1), ('b', 'a', 2)],
])
def test_invalid_edges(edges):
    with pytest.raises(SpecError):
        RoadNetwork.from_edges(edges)


def test_edges_are_canonical():
    net = RoadNetwork.from_edges([('b', 'a', 2), ('a', 'c', 1)])
    assert net.edges == (('a', 'b', 2), ('a', 'c', 1))


def test_path_helpers():
    net = gadget_network(2)
    assert path_length(net, ('u1', 'v1', 'v2', 'D')) == 3
    assert is_simple_path(net, ('u1', 'v1', 'v2', 'D'))
    assert not is_simple_path(net, ('u1', 'v2', 'D'))
    assert not is_simple_path(net, ('v1', 'v2', 'v1'))
