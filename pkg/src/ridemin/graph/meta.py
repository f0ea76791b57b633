"""
Meta graph: trips grouped by source vertex, with an arc mu -> nu when a trip
starting at mu can serve a trip starting at nu.

After shortcut removal the graph is expected to be an inverse tree (every node
has at most one out-arc and a single sink). Labels p..1 are assigned so that
every arc runs from a larger label to a smaller one.
"""
from typing import Dict, Iterable, List, Mapping, Optional, Tuple

import networkx as nx
from loguru import logger

from ridemin.errors import PreconditionError, SpecError
from ridemin.graph.serve import check_transitive
from ridemin.model.instance import Instance
from ridemin.model.network import Vertex
from ridemin.model.schedule import route_serves
from ridemin.util import natural_key


class MetaGraph:

    def __init__(self, graph: nx.DiGraph, labels: Optional[Mapping[Vertex, int]] = None):
        self.graph = graph
        self.labels: Dict[Vertex, int] = dict(labels or {})
        self._node_of = {t: mu for mu, trips in graph.nodes(data='trips') for t in trips or ()}
        self._by_label = {label: mu for mu, label in self.labels.items()}

    @classmethod
    def from_arcs(cls, arcs: Iterable[Tuple[Vertex, Vertex]], nodes: Iterable[Vertex] = (),
                  trips: Optional[Mapping[Vertex, Iterable[int]]] = None):
        """Unsimplified meta graph from explicit arcs; `trips` maps node to its trip ids."""
        g = nx.DiGraph()
        g.add_nodes_from(nodes)
        g.add_edges_from(arcs)
        trips = trips or {}
        for mu in g:
            g.nodes[mu]['trips'] = tuple(sorted(trips.get(mu, ())))
        return cls(g)

    def __len__(self):
        return self.graph.number_of_nodes()

    def __contains__(self, mu):
        return mu in self.graph

    def __iter__(self):
        return iter(sorted(self.graph, key=natural_key))

    @property
    def arcs(self) -> List[Tuple[Vertex, Vertex]]:
        return sorted(self.graph.edges, key=lambda e: (natural_key(e[0]), natural_key(e[1])))

    @property
    def is_labeled(self):
        return len(self.labels) == len(self)

    def node(self, trip_id) -> Vertex:
        try:
            return self._node_of[trip_id]
        except KeyError:
            raise SpecError(f'Trip {trip_id} is not in the meta graph')

    def trips(self, mu) -> Tuple[int, ...]:
        """R(mu)"""
        self._check(mu)
        return self.graph.nodes[mu]['trips']

    def label(self, mu) -> int:
        self._check(mu)
        return self.labels[mu]

    def by_label(self, label) -> Vertex:
        return self._by_label[label]

    def in_label_order(self, reverse=True) -> List[Vertex]:
        """Nodes from mu_p down to mu_1 (or upward with reverse=False)."""
        return sorted(self.labels, key=self.labels.get, reverse=reverse)

    def ancestors(self, mu) -> frozenset:
        """A_mu: nodes with a nonempty path to mu."""
        self._check(mu)
        return frozenset(nx.ancestors(self.graph, mu))

    def ancestors_or_self(self, mu) -> frozenset:
        return self.ancestors(mu) | {mu}

    def descendants(self, mu) -> frozenset:
        """D_mu: nodes reachable from mu by a nonempty path."""
        self._check(mu)
        return frozenset(nx.descendants(self.graph, mu))

    def descendants_or_self(self, mu) -> frozenset:
        return self.descendants(mu) | {mu}

    def sinks(self) -> List[Vertex]:
        return sorted((mu for mu in self.graph if self.graph.out_degree(mu) == 0), key=natural_key)

    def is_inverse_tree(self) -> bool:
        return is_inverse_tree(self)

    def simplified(self) -> 'MetaGraph':
        """Copy with every shortcut arc removed; reachability is unchanged."""
        if not nx.is_directed_acyclic_graph(self.graph):
            cycle = [u for u, _ in nx.find_cycle(self.graph)]
            raise PreconditionError('inverse-tree', f'meta graph has a cycle through {" ".join(cycle)}')
        reduced = nx.transitive_reduction(self.graph)
        reduced.add_nodes_from(self.graph.nodes(data=True))
        removed = self.graph.number_of_edges() - reduced.number_of_edges()
        if removed:
            logger.debug(f'Removed {removed} shortcut arc(s) from the meta graph')
        return MetaGraph(reduced, self.labels)

    def dump(self) -> str:
        """One "b a" line per arc (mu_b, mu_a), in label space."""
        if not self.is_labeled:
            raise SpecError('Meta graph must be labeled before dumping')
        lines = sorted((self.labels[u], self.labels[v]) for u, v in self.graph.edges)
        return ''.join(f'{b} {a}\n' for b, a in lines)

    def _check(self, mu):
        if mu not in self.graph:
            raise SpecError(f'Unknown meta graph node: {mu}')

    def __repr__(self):
        return f'<MetaGraph:{len(self)} nodes:{self.graph.number_of_edges()} arcs>'


def is_inverse_tree(mg: MetaGraph) -> bool:
    g = mg.graph
    if len(g) == 0 or not nx.is_directed_acyclic_graph(g):
        return False
    if any(g.out_degree(mu) > 1 for mu in g):
        return False
    return len(mg.sinks()) == 1


def _check_conditions(inst: Instance):
    violated = inst.condition_flags.violated(1, 2, 3)
    if violated:
        raise PreconditionError(violated[0], f'condition {violated[0]} does not hold'
                                             f' (conditions {inst.condition_flags})')


def build_meta_graph(inst: Instance, dg: Optional[nx.DiGraph] = None) -> MetaGraph:
    """Group trips by source and connect nodes that can serve one another.

    :param dg: route relation digraph (``build_serve_digraph(inst, limits=False)``);
        when given, node arcs are read from it and it must be transitive.
        Otherwise arcs are found by walking each node's preferred paths.
    """
    _check_conditions(inst)
    members = {}
    for trip in inst:
        members.setdefault(trip.source, []).append(trip.id)
    if dg is not None:
        witness = check_transitive(dg)
        if witness is not None:
            k, j, i = witness
            raise PreconditionError('transitive', f'trip {i} serves {j} and {j} serves {k}, but {i} cannot serve {k}')
        arcs = {
            (inst.trip(i).source, inst.trip(j).source)
            for j, i in dg.edges
            if inst.trip(i).source != inst.trip(j).source
        }
    else:
        arcs = set(_walk_arcs(inst, members))
    mg = MetaGraph.from_arcs(arcs, nodes=members, trips=members)
    if dg is None:
        witness = check_transitive(mg.graph)
        if witness is not None:
            k, j, i = witness
            raise PreconditionError('transitive', f'trips at {k} can serve {j} and {j} can serve {i},'
                                                  f' but {k} cannot serve {i}')
    logger.debug(f'Meta graph: {len(mg)} nodes, {len(arcs)} arcs before simplification')
    return mg.simplified()


def route_shape(trip):
    """Everything the route relation reads from a driver: same shape, same passengers."""
    return trip.destination, trip.detour_limit, trip.preferred_paths, trip.window


def _walk_arcs(inst: Instance, members):
    """Arcs mu -> nu where nu's source lies on a path of some trip at mu.

    Each candidate pair is confirmed with one schedule check per distinct
    route shape, so identical trips are not re-simulated.
    """
    shapes = {}
    for mu, ids in members.items():
        for i in ids:
            shapes.setdefault(mu, {}).setdefault(route_shape(inst.trip(i)), i)
    for mu in members:
        found = set()
        for i in shapes[mu].values():
            for path in inst.trip(i).preferred_paths:
                for nu in path[1:]:
                    if nu in found or nu not in members:
                        continue
                    if any(route_serves(inst, i, j) for j in shapes[nu].values()):
                        found.add(nu)
                        yield mu, nu


def label_nodes(mg: MetaGraph, fallback=False) -> MetaGraph:
    """Assign labels p..1 so every arc runs from a larger to a smaller label.

    Inverse trees are labeled with a stack walk from the sink: in-arcs are
    explored by ascending source vertex and a node is labeled when popped, the
    first pop receiving p. With ``fallback=True`` any DAG is accepted and
    labeled by topological order.
    """
    g = mg.graph
    p = len(g)
    if not is_inverse_tree(mg):
        if not fallback:
            raise PreconditionError('inverse-tree', 'meta graph is not an inverse tree')
        if not nx.is_directed_acyclic_graph(g):
            raise PreconditionError('inverse-tree', 'meta graph has a cycle')
        logger.warning('Meta graph is not an inverse tree; labeling by topological order')
        order = nx.lexicographical_topological_sort(g, key=natural_key)
        return MetaGraph(g, {mu: p - k for k, mu in enumerate(order)})
    sink = mg.sinks()[0]
    labels = {}
    stack = [sink]
    pending = {mu: sorted(g.predecessors(mu), key=natural_key, reverse=True) for mu in g}
    label = p
    while stack:
        mu = stack[-1]
        if pending[mu]:
            stack.append(pending[mu].pop())
        else:
            stack.pop()
            labels[mu] = label
            label -= 1
    return MetaGraph(g, labels)


def meta_queries(mg: MetaGraph, mu):
    """(A_mu, A*_mu, D_mu, D*_mu, node lookup) for one node."""
    return (mg.ancestors(mu), mg.ancestors_or_self(mu),
            mg.descendants(mu), mg.descendants_or_self(mu), mg.node)
