import pytest

from ridemin.errors import ParseError
from ridemin.io import dump_solution, load_solution, read_solution, write_solution
from ridemin.model import Assignment, Solution, validate_solution
from ridemin.pytest_utils import chain_instance

CHAIN_SOLUTION = '''# ridemin solution v1
# instance: chain
driver 1 path 0 depart 0 arrive 3 distance 3
serves 1 2 3
route c1 c2 c3 D
pickup 1 c2 1 2
pickup 2 c3 2 3
'''


@pytest.fixture
def chain():
    return chain_instance([2, 0, 0])


def test_dump(chain):
    sol = Solution.from_served(chain, {1: {2, 3}})
    assert dump_solution(sol, chain.name) == CHAIN_SOLUTION


def test_load_validates(chain):
    sol = load_solution(CHAIN_SOLUTION)
    assert sol.served_map() == {1: {1, 2, 3}}
    assert validate_solution(chain, sol).valid


def test_served_sets_only(chain):
    sol = load_solution('driver 1\nserves 1 2\ndriver 3\nserves 3\n')
    assert sol.assignments[1] == Assignment(frozenset({1, 2}))
    assert validate_solution(chain, sol).valid


def test_file_round_trip(chain, tmp_path):
    sol = Solution.solo(chain)
    path = tmp_path / 'out' / 'solo.sol'
    write_solution(sol, path, instance_name='chain')
    assert read_solution(path) == sol


def test_tampered_pickup_time(chain):
    sol = load_solution(CHAIN_SOLUTION.replace('pickup 2 c3 2 3', 'pickup 2 c3 0 3'))
    assert validate_solution(chain, sol).kinds() == {'time'}


@pytest.mark.parametrize(('text', 'field'), [
    ('serves 1\n', None),
    ('driver x\nserves 1\n', 'driver'),
    ('driver 1 path 0 depart 0\nserves 1\n', 'driver'),
    ('driver 1\n', 'serves'),
    ('driver 1 path 0 depart 0 arrive 1 distance 1\nserves 1\n', 'route'),
    ('driver 1\nserves 1\ndriver 1\nserves 1\n', 'driver'),
    ('driver 1\nserves 1 b\n', 'serves'),
    ('driver 1 path 0 depart 0 arrive 1 distance 1\nserves 1 2\nroute a D\npickup 0 a\n', 'pickup'),
])
def test_malformed(text, field):
    with pytest.raises(ParseError) as e:
        load_solution(text)
    assert e.value.field == field


def test_unknown_keyword():
    with pytest.raises(ParseError, match='unknown keyword'):
        load_solution('driver 1\nserves 1\nstops 2\n')
