import math
from dataclasses import dataclass, field
from typing import FrozenSet, Iterable, Sequence, Tuple

import networkx as nx

from ridemin.errors import SpecError, UnknownVertexError
from ridemin.util import natural_key

Vertex = str
INFINITY = math.inf


@dataclass(frozen=True)
class RoadNetwork:
    """Weighted undirected road network with non-negative integer edge lengths."""
    vertices: FrozenSet[Vertex]
    edges: Tuple[Tuple[Vertex, Vertex, int], ...]
    graph: nx.Graph = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        g = nx.Graph()
        g.add_nodes_from(self.vertices)
        canonical = {}
        for u, v, length in self.edges:
            if u == v:
                raise SpecError(f'Self-loop edge at vertex {u}')
            for x in (u, v):
                if x not in self.vertices:
                    raise UnknownVertexError(x)
            if not isinstance(length, int) or length < 0:
                raise SpecError(f'Edge {u}-{v} has invalid length {length!r}')
            key = (u, v) if natural_key(u) <= natural_key(v) else (v, u)
            if key in canonical:
                raise SpecError(f'Duplicate edge {key[0]}-{key[1]}')
            canonical[key] = length
            g.add_edge(u, v, length=length)
        object.__setattr__(self, 'edges', tuple(
            (u, v, canonical[u, v]) for u, v in sorted(canonical, key=lambda e: (natural_key(e[0]), natural_key(e[1])))
        ))
        object.__setattr__(self, 'graph', g)

    @classmethod
    def from_edges(cls, edges: Iterable[Tuple[Vertex, Vertex, int]], vertices: Iterable[Vertex] = ()):
        edges = tuple(edges)
        names = set(vertices)
        for u, v, _ in edges:
            names.update((u, v))
        return cls(frozenset(names), edges)

    def __contains__(self, vertex):
        return vertex in self.vertices

    def sorted_vertices(self):
        return sorted(self.vertices, key=natural_key)

    def length(self, u: Vertex, v: Vertex) -> int:
        try:
            return self.graph.edges[u, v]['length']
        except KeyError:
            raise SpecError(f'No edge between {u} and {v}')

    def shortest_path(self, u: Vertex, v: Vertex) -> Sequence[Vertex]:
        self._check(u, v)
        return nx.shortest_path(self.graph, u, v, weight='length')

    def _check(self, *vertices):
        for x in vertices:
            if x not in self.vertices:
                raise UnknownVertexError(x)


def shortest_distance(net: RoadNetwork, u: Vertex, v: Vertex):
    """Length of a shortest u-v path, or INFINITY if v is unreachable."""
    net._check(u, v)
    try:
        return nx.shortest_path_length(net.graph, u, v, weight='length')
    except nx.NetworkXNoPath:
        return INFINITY


def path_length(net: RoadNetwork, path: Sequence[Vertex]) -> int:
    return sum(net.length(u, v) for u, v in zip(path, path[1:]))


def is_simple_path(net: RoadNetwork, path: Sequence[Vertex]) -> bool:
    if not path or len(set(path)) != len(path):
        return False
    if any(x not in net.vertices for x in path):
        return False
    return all(net.graph.has_edge(u, v) for u, v in zip(path, path[1:]))
