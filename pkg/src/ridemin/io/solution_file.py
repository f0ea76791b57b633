"""
Solution files: one block per driver, drivers in ascending order.

    # ridemin solution v1
    # instance: <name>                  (optional)
    driver <id> path <path index> depart <time> arrive <time> distance <length>
    serves <id> ...                     (the driver itself included)
    route <vertex> ...
    pickup <route index> <vertex> <time> <id> ...
"""
from typing import Dict, List

from ridemin.errors import ParseError
from ridemin.io.streams import open_text
from ridemin.model.solution import Assignment, Solution
from ridemin.model.trip import Pickup, PickupPlan

MAGIC = '# ridemin solution v1'
_DRIVER_KEYS = ('path', 'depart', 'arrive', 'distance')


def dumps(sol: Solution, instance_name: str = '') -> str:
    lines = [MAGIC]
    if instance_name:
        lines.append(f'# instance: {instance_name}')
    for driver, (served, plan) in sol.assignments.items():
        if plan is None:
            lines.append(f'driver {driver}')
        else:
            lines.append(f'driver {driver} path {plan.path_index} depart {plan.depart}'
                         f' arrive {plan.arrive} distance {plan.distance}')
        lines.append('serves ' + ' '.join(map(str, sorted(served))))
        if plan is not None:
            lines.append('route ' + ' '.join(plan.route))
            for p in plan.pickups:
                lines.append(f'pickup {p.index} {p.vertex} {p.time} ' + ' '.join(map(str, sorted(p.passengers))))
    return '\n'.join(lines) + '\n'


def _ints(tokens, line, field):
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError(f'expected integers, got "{" ".join(tokens)}"', line=line, field=field)


class _Block:

    def __init__(self, driver, header, line):
        self.driver = driver
        self.header = header
        self.line = line
        self.served: List[int] = []
        self.route = None
        self.pickups: List[Pickup] = []

    def assignment(self) -> Assignment:
        if not self.served:
            raise ParseError(f'driver {self.driver} has no "serves" line', line=self.line, field='serves')
        if self.header is None:
            if self.route is not None or self.pickups:
                raise ParseError(f'driver {self.driver} has a route but no plan header', line=self.line)
            return Assignment(frozenset(self.served))
        if self.route is None:
            raise ParseError(f'driver {self.driver} has no "route" line', line=self.line, field='route')
        plan = PickupPlan(
            driver=self.driver,
            path_index=self.header['path'],
            route=tuple(self.route),
            depart=self.header['depart'],
            arrive=self.header['arrive'],
            distance=self.header['distance'],
            pickups=tuple(self.pickups),
        )
        return Assignment(frozenset(self.served), plan)


def _driver_line(tokens, line):
    driver = _ints(tokens[1:2], line, 'driver')
    if len(driver) != 1:
        raise ParseError('driver line needs an id', line=line, field='driver')
    rest = tokens[2:]
    if not rest:
        return driver[0], None
    if len(rest) != 2 * len(_DRIVER_KEYS) or tuple(rest[::2]) != _DRIVER_KEYS:
        raise ParseError(f'expected "{" ".join(k + " <n>" for k in _DRIVER_KEYS)}"', line=line, field='driver')
    values = _ints(rest[1::2], line, 'driver')
    return driver[0], dict(zip(_DRIVER_KEYS, values))


def loads(text: str) -> Solution:
    blocks: Dict[int, _Block] = {}
    current = None
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith('#'):
            continue
        keyword, *tokens = line.split()
        if keyword == 'driver':
            driver, header = _driver_line(line.split(), number)
            if driver in blocks:
                raise ParseError(f'driver {driver} listed twice', line=number, field='driver')
            current = blocks[driver] = _Block(driver, header, number)
            continue
        if current is None:
            raise ParseError(f'"{keyword}" before any driver line', line=number)
        if keyword == 'serves':
            current.served.extend(_ints(tokens, number, 'serves'))
        elif keyword == 'route':
            current.route = tokens
        elif keyword == 'pickup':
            if len(tokens) < 4:
                raise ParseError('pickup lines are "<index> <vertex> <time> <id> ..."', line=number, field='pickup')
            index, = _ints(tokens[:1], number, 'pickup')
            time, = _ints(tokens[2:3], number, 'pickup')
            passengers = frozenset(_ints(tokens[3:], number, 'pickup'))
            current.pickups.append(Pickup(index, tokens[1], time, passengers))
        else:
            raise ParseError(f'unknown keyword "{keyword}"', line=number)
    return Solution({driver: block.assignment() for driver, block in blocks.items()})


def read_solution(path, encoding='utf8') -> Solution:
    with open_text(path, encoding=encoding) as fh:
        return loads(fh.read())


def write_solution(sol: Solution, path, instance_name='', encoding='utf8'):
    with open_text(path, 'w', encoding=encoding, newline='\n') as fh:
        fh.write(dumps(sol, instance_name))
