"""
Line-oriented instance files.

    # ridemin instance v1
    # name: <name>                      (optional)
    <vertex count> <edge count> <trip count>
    <vertex> <vertex> ...
    <u> <v> <length>                    (one per edge)
    <id> <s> <t> <n> <d> <delta> <alpha> <beta> <path> [| <path> ...]

Paths are space-separated vertex lists. The canonical form lists vertices,
edges and trips in ascending order with single spaces and a trailing newline.
"""
from typing import List

from ridemin.errors import ParseError, SpecError
from ridemin.io.streams import open_text
from ridemin.model.instance import Instance
from ridemin.model.network import RoadNetwork
from ridemin.model.trip import Trip

MAGIC = '# ridemin instance v1'
TRIP_FIELDS = ('id', 'source', 'destination', 'capacity', 'detour_limit',
               'stop_limit', 'depart_earliest', 'arrive_latest')
PATH_SEP = '|'


def dumps(inst: Instance) -> str:
    net = inst.network
    lines = [MAGIC]
    if inst.name:
        lines.append(f'# name: {inst.name}')
    lines.append(f'{len(net.vertices)} {len(net.edges)} {len(inst)}')
    lines.append(' '.join(net.sorted_vertices()))
    lines.extend(f'{u} {v} {length}' for u, v, length in net.edges)
    for t in inst:
        paths = f' {PATH_SEP} '.join(' '.join(p) for p in t.preferred_paths)
        lines.append(f'{t.id} {t.source} {t.destination} {t.capacity} {t.detour_limit}'
                     f' {t.stop_limit} {t.depart_earliest} {t.arrive_latest} {paths}')
    return '\n'.join(lines) + '\n'


def _int(value, field, line, minimum=None):
    try:
        number = int(value)
    except ValueError:
        raise ParseError(f'expected an integer, got "{value}"', line=line, field=field)
    if minimum is not None and number < minimum:
        raise ParseError(f'must be at least {minimum}, got {number}', line=line, field=field)
    return number


def _content(text):
    """(line number, stripped line) pairs, skipping comments and blank lines."""
    for number, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if line and not line.startswith('#'):
            yield number, line


def _name(text):
    for line in text.splitlines():
        if line.startswith('# name:'):
            return line[len('# name:'):].strip()
    return ''


def _trip(tokens: List[str], line) -> Trip:
    if len(tokens) < len(TRIP_FIELDS) + 1:
        raise ParseError(f'expected {len(TRIP_FIELDS)} fields and a path, got {len(tokens)} tokens', line=line)
    trip_id = _int(tokens[0], 'id', line, minimum=1)
    source, destination = tokens[1], tokens[2]
    capacity = _int(tokens[3], 'capacity', line, minimum=0)
    detour = _int(tokens[4], 'detour_limit', line, minimum=0)
    stops = _int(tokens[5], 'stop_limit', line, minimum=0)
    alpha = _int(tokens[6], 'depart_earliest', line)
    beta = _int(tokens[7], 'arrive_latest', line)
    paths, current = [], []
    for token in tokens[8:]:
        if token == PATH_SEP:
            paths.append(tuple(current))
            current = []
        else:
            current.append(token)
    paths.append(tuple(current))
    if any(not p for p in paths):
        raise ParseError('empty preferred path', line=line, field='preferred_paths')
    try:
        return Trip(trip_id, source, destination, capacity, detour, tuple(paths), stops, alpha, beta)
    except SpecError as e:
        raise ParseError(str(e), line=line)


def loads(text: str) -> Instance:
    lines = list(_content(text))
    if not lines:
        raise ParseError('empty instance file', line=1)
    number, header = lines[0]
    parts = header.split()
    if len(parts) != 3:
        raise ParseError(f'header must be "<vertices> <edges> <trips>", got "{header}"', line=number)
    n_vertices = _int(parts[0], 'vertex count', number, minimum=1)
    n_edges = _int(parts[1], 'edge count', number, minimum=0)
    n_trips = _int(parts[2], 'trip count', number, minimum=0)
    expected = 2 + n_edges + n_trips
    if len(lines) != expected:
        raise ParseError(f'expected {expected} content lines, found {len(lines)}', line=lines[-1][0])
    number, vertex_line = lines[1]
    vertices = vertex_line.split()
    if len(vertices) != n_vertices:
        raise ParseError(f'expected {n_vertices} vertices, got {len(vertices)}', line=number, field='vertices')
    edges = []
    for number, line in lines[2:2 + n_edges]:
        tokens = line.split()
        if len(tokens) != 3:
            raise ParseError(f'edge lines are "<u> <v> <length>", got "{line}"', line=number)
        edges.append((tokens[0], tokens[1], _int(tokens[2], 'length', number, minimum=0)))
    try:
        network = RoadNetwork(frozenset(vertices), tuple(edges))
    except SpecError as e:
        raise ParseError(str(e), line=lines[1][0])
    trips = [_trip(line.split(), number) for number, line in lines[2 + n_edges:]]
    try:
        return Instance(network, tuple(trips), name=_name(text))
    except SpecError as e:
        raise ParseError(str(e))


def read_instance(path, encoding='utf8') -> Instance:
    with open_text(path, encoding=encoding) as fh:
        return loads(fh.read())


def write_instance(inst: Instance, path, encoding='utf8'):
    with open_text(path, 'w', encoding=encoding, newline='\n') as fh:
        fh.write(dumps(inst))
