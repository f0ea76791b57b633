import pytest

from ridemin.algo import Matching, edge_swap, exact_max_matching, greedy_matching
from ridemin.algo.swap import find_swap
from ridemin.errors import InvariantBreach, SpecError
from ridemin.graph import build_serve_digraph
from ridemin.model import validate_solution
from ridemin.pytest_utils import build_instance


@pytest.fixture
def swap_instance():
    """Trip 2 can serve 1 or 3; trip 4 can serve 3; each has one seat."""
    return build_instance([
        (('a1', 'a3', 'D'), 0, 0),
        (('a2', 'a1', 'a3', 'D'), 1, 1),
        (('a3', 'D'), 0, 0),
        (('a4', 'a3', 'D'), 1, 1),
    ])


def test_serve_arcs(swap_instance):
    assert sorted(build_serve_digraph(swap_instance).edges) == [(1, 2), (3, 2), (3, 4)]


def test_one_for_two_swap(swap_instance):
    stats = {}
    sol = edge_swap(swap_instance, initial=[(3, 2)], stats=stats)
    assert stats['matching'] == [(1, 2), (3, 4)]
    assert stats['swaps'] == 1
    assert stats['passengers'] == 2
    assert sol.drivers == [2, 4]
    assert validate_solution(swap_instance, sol).valid


def test_find_swap_order(swap_instance):
    dg = build_serve_digraph(swap_instance)
    assert find_swap(dg, Matching([(3, 2)]), 1) == (((3, 2),), ((1, 2), (3, 4)))
    assert find_swap(dg, Matching([(1, 2), (3, 4)]), 2) is None


def test_greedy_start(swap_instance):
    dg = build_serve_digraph(swap_instance)
    assert greedy_matching(dg).arcs == [(1, 2), (3, 4)]
    stats = {}
    edge_swap(swap_instance, stats=stats)
    assert stats['swaps'] == 0


def test_exact_matches_swap(swap_instance):
    assert exact_max_matching(build_serve_digraph(swap_instance)) == 2


@pytest.mark.parametrize('k', [0, 3])
def test_depth_bounds(swap_instance, k):
    with pytest.raises(SpecError):
        edge_swap(swap_instance, k=k)


def test_depth_two(swap_instance):
    sol = edge_swap(swap_instance, k=2, initial=[(3, 2)])
    assert len(sol) == 2


def test_bad_initial_matching(swap_instance):
    with pytest.raises(InvariantBreach):
        edge_swap(swap_instance, initial=[(2, 1)])
