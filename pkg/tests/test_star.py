import itertools

from hypothesis import given, settings, strategies as st
import pytest

from ridemin.algo import Matching, Star, exact_max_matching, greedy_star, improve_matching, is_improvement, star_improve
from ridemin.algo.star import check_matching, star_stops
from ridemin.errors import InvariantBreach, PreconditionError, SpecError
from ridemin.gen import RandomTreeSpec, ThreePartitionSpec, gen_3partition_stop, gen_random_tree
from ridemin.graph import build_serve_digraph
from ridemin.model import validate_solution
from ridemin.pytest_utils import build_instance, chain_instance


@pytest.fixture
def star_instance():
    """Trip 1 at X with two seats and one stop; trip 2 at X; trips 3-5 at Y."""
    return build_instance([
        (('X', 'Y', 'D'), 2, 1),
        (('X', 'Y', 'D'), 0, 0),
        (('Y', 'D'), 0, 0),
        (('Y', 'D'), 0, 0),
        (('Y', 'D'), 0, 0),
    ])


def test_greedy_star_prefers_same_source(star_instance):
    dg = build_serve_digraph(star_instance)
    star = greedy_star(dg, 1, Matching())
    assert star == Star(1, frozenset({2, 3}), 1)
    assert star.arcs == [(2, 1), (3, 1)]


def test_greedy_star_skips_matched(star_instance):
    dg = build_serve_digraph(star_instance)
    star = greedy_star(dg, 1, Matching([(2, 1)]))
    assert star.leaves == {3, 4}
    assert star.stop_count == 1


def test_greedy_star_overrides(star_instance):
    dg = build_serve_digraph(star_instance)
    star = greedy_star(dg, 1, Matching(), stops={1: 0})
    assert star.leaves == {2}
    assert greedy_star(dg, 1, Matching(), caps={1: 0}).leaves == frozenset()


def test_greedy_star_unknown_vertex(star_instance):
    with pytest.raises(SpecError):
        greedy_star(build_serve_digraph(star_instance), 9, Matching())


def test_matching_rules():
    m = Matching([(2, 1)])
    assert m.count(1) == 1 and m.count(2) == 1 and m.count(3) == 0
    assert (2, 1) in m
    with pytest.raises(InvariantBreach):
        m.add(3, 3)
    with pytest.raises(InvariantBreach):
        m.add(2, 4)
    with pytest.raises(InvariantBreach):
        m.add(3, 2)
    m.add(3, 1)
    m.remove_incident([1])
    assert len(m) == 0


def test_is_improvement():
    m = Matching([(2, 1)])
    assert not is_improvement(Star(3, frozenset({2})), m)
    assert is_improvement(Star(3, frozenset({2, 4})), m)
    assert not is_improvement(Star(1, frozenset({2})), m)


def test_improve_matching_is_valid(star_instance):
    dg = build_serve_digraph(star_instance)
    m, improvements, passes = improve_matching(dg)
    check_matching(dg, m)
    assert len(m) == 2
    assert improvements == 1
    assert passes == 2


def test_chain_one_driver():
    inst = chain_instance([2, 0, 0])
    stats = {}
    sol = star_improve(inst, stats=stats)
    assert sol.drivers == [1]
    assert stats['passengers'] == 2
    assert exact_max_matching(build_serve_digraph(inst)) == 2


def test_star_improve_on_gadget():
    inst = gen_3partition_stop(ThreePartitionSpec(2, 7, (2, 2, 3, 2, 2, 3)))
    sol = star_improve(inst)
    assert validate_solution(inst, sol).valid
    assert 6 <= len(sol) <= 15


@pytest.mark.parametrize(('trips', 'condition'), [
    ([{'path': ('a', 'D'), 'detour_limit': 1}, (('b', 'D'), 0, 0)], 2),
    ([{'path': ('a', 'b', 'D'), 'paths': [('a', 'b', 'D'), ('a', 'c', 'D')]}], 3),
    ([(('a', 'D'), 1, 1), {'path': ('b', 'D'), 'window': (0, 5)}], 5),
])
def test_star_improve_preconditions(trips, condition):
    with pytest.raises(PreconditionError) as e:
        star_improve(build_instance(trips))
    assert e.value.condition == condition


def test_check_matching_rejects_missing_arc(star_instance):
    dg = build_serve_digraph(star_instance)
    with pytest.raises(InvariantBreach):
        check_matching(dg, Matching([(1, 3)]))


def random_matching(dg, rnd):
    """A valid matching built by adding the digraph's arcs in random order while they fit."""
    m = Matching()
    arcs = sorted(dg.edges)
    rnd.shuffle(arcs)
    for leaf, root in arcs:
        if leaf in m.vertices() or m.root_of(root) is not None:
            continue
        leaves = m.leaves(root) | {leaf}
        if len(leaves) > dg.nodes[root]['capacity'] or star_stops(dg, root, leaves) > dg.nodes[root]['stop_limit']:
            continue
        m.add(leaf, root)
    return m


@settings(max_examples=60, deadline=None)
@given(seed=st.integers(0, 10_000), trips=st.integers(2, 8), rnd=st.randoms(use_true_random=False))
def test_failed_greedy_star_means_no_improvement_at_v(seed, trips, rnd):
    dg = build_serve_digraph(gen_random_tree(RandomTreeSpec(trips=trips, nodes=min(trips, 3), seed=seed)))
    m = random_matching(dg, rnd)
    check_matching(dg, m)
    for v in dg:
        if is_improvement(greedy_star(dg, v, m), m):
            continue
        candidates = sorted(dg.predecessors(v))
        for size in range(1, min(dg.nodes[v]['capacity'], len(candidates)) + 1):
            for leaves in itertools.combinations(candidates, size):
                if star_stops(dg, v, leaves) <= dg.nodes[v]['stop_limit']:
                    assert not is_improvement(Star(v, frozenset(leaves)), m)
