import pytest

from ridemin.errors import InvariantBreach, SpecError
from ridemin.gen import ThreePartitionSpec, gen_3partition_stop, is_three_partition, yes_solution_served
from ridemin.model import Assignment, Solution, solution_metrics, validate_solution
from ridemin.pytest_utils import chain_instance

YES = ThreePartitionSpec(2, 7, (2, 2, 3, 2, 2, 3))


@pytest.fixture(scope='module')
def stop_gadget():
    return gen_3partition_stop(YES)


@pytest.fixture(scope='module')
def yes_solution(stop_gadget):
    return Solution.from_served(stop_gadget, yes_solution_served(YES, is_three_partition(YES)))


def test_yes_solution_valid(stop_gadget, yes_solution):
    report = validate_solution(stop_gadget, yes_solution)
    assert report.valid, str(report)
    assert solution_metrics(stop_gadget, yes_solution) == (6, 18)


def test_overlap_detected(stop_gadget, yes_solution):
    assignments = dict(yes_solution.assignments)
    taken = next(t for d, a in assignments.items() if d != 1 for t in a.served if t != d)
    served, _ = assignments[1]
    assignments[1] = Assignment(served | {taken})
    report = validate_solution(stop_gadget, Solution(assignments))
    assert not report.valid
    assert 'overlap' in report.kinds()


def test_empty_solution_uncovered(stop_gadget):
    report = validate_solution(stop_gadget, Solution())
    assert report.kinds() == {'coverage'}
    assert validate_solution(stop_gadget, Solution(), complete=False).valid


def test_capacity_violation(stop_gadget):
    sol = Solution({1: Assignment(frozenset({1, 7, 8, 9}))})
    report = validate_solution(stop_gadget, sol, complete=False)
    assert report.kinds() == {'capacity'}


def test_tampered_plan(stop_gadget, yes_solution):
    driver = 1
    served, plan = yes_solution.assignments[driver]
    late = plan.pickups[0].__class__(plan.pickups[0].index, plan.pickups[0].vertex, -1,
                                     plan.pickups[0].passengers)
    assignments = dict(yes_solution.assignments)
    assignments[driver] = Assignment(served, plan.__class__(
        plan.driver, plan.path_index, plan.route, plan.depart, plan.arrive, plan.distance, (late,)))
    report = validate_solution(stop_gadget, Solution(assignments))
    assert 'time' in report.kinds()


def test_metrics_of_invalid_solution(stop_gadget):
    with pytest.raises(SpecError):
        solution_metrics(stop_gadget, Solution())


def test_solo_metrics():
    inst = chain_instance([0, 0, 0])
    assert solution_metrics(inst, Solution.solo(inst)) == (3, 3 + 2 + 1)


def test_chain_single_driver():
    inst = chain_instance([2, 0, 0])
    sol = Solution.from_served(inst, {1: {2, 3}})
    assert solution_metrics(inst, sol) == (1, 3)
    assert sol.passenger_count() == 2


def test_from_served_rejects_infeasible():
    inst = chain_instance([1, 0, 0])
    with pytest.raises(InvariantBreach):
        Solution.from_served(inst, {1: {2, 3}})
