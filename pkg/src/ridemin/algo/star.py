"""
Star-based carpool matching.

A matching is a set of vertex-disjoint stars in the serve digraph: each leaf
has one matched arc towards its root, and a root is never itself a leaf.
Roots become drivers and leaves their passengers.
"""
import time
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple

import networkx as nx
from loguru import logger

from ridemin.errors import InvariantBreach, PreconditionError, SpecError
from ridemin.graph.serve import build_serve_digraph, in_neighbours_by_source
from ridemin.model.instance import Instance
from ridemin.model.solution import Solution
from ridemin.util import natural_key


@dataclass(frozen=True)
class Star:
    root: int
    leaves: FrozenSet[int] = frozenset()
    stop_count: int = 0

    def __len__(self):
        return len(self.leaves)

    @property
    def arcs(self) -> List[Tuple[int, int]]:
        return [(leaf, self.root) for leaf in sorted(self.leaves)]


class Matching:

    def __init__(self, arcs: Iterable[Tuple[int, int]] = ()):
        self._root_of: Dict[int, int] = {}
        self._leaves: Dict[int, set] = {}
        for leaf, root in arcs:
            self.add(leaf, root)

    def add(self, leaf, root):
        if leaf == root:
            raise InvariantBreach(f'Self-arc {leaf} in matching')
        if leaf in self._root_of or leaf in self._leaves:
            raise InvariantBreach(f'Trip {leaf} is already matched')
        if root in self._root_of:
            raise InvariantBreach(f'Trip {root} is a leaf and cannot be a root')
        self._root_of[leaf] = root
        self._leaves.setdefault(root, set()).add(leaf)

    def remove(self, leaf):
        root = self._root_of.pop(leaf)
        self._leaves[root].discard(leaf)
        if not self._leaves[root]:
            del self._leaves[root]

    def remove_incident(self, vertices: Iterable[int]):
        """Drop M(V'): every matched arc touching `vertices`."""
        for v in vertices:
            if v in self._root_of:
                self.remove(v)
            for leaf in list(self._leaves.get(v, ())):
                self.remove(leaf)

    def apply(self, star: Star):
        self.remove_incident({star.root} | star.leaves)
        for leaf in sorted(star.leaves):
            self.add(leaf, star.root)

    def count(self, v) -> int:
        """|M(v)|"""
        if v in self._root_of:
            return 1
        return len(self._leaves.get(v, ()))

    def root_of(self, leaf) -> Optional[int]:
        return self._root_of.get(leaf)

    def leaves(self, root) -> FrozenSet[int]:
        return frozenset(self._leaves.get(root, ()))

    def roots(self) -> List[int]:
        return sorted(self._leaves)

    def vertices(self) -> FrozenSet[int]:
        """V(M)"""
        return frozenset(self._root_of) | frozenset(self._leaves)

    @property
    def arcs(self) -> List[Tuple[int, int]]:
        return sorted(self._root_of.items())

    def copy(self) -> 'Matching':
        return Matching(self.arcs)

    def __len__(self):
        return len(self._root_of)

    def __contains__(self, arc):
        leaf, root = arc
        return self._root_of.get(leaf) == root

    def __repr__(self):
        return f'<Matching:{len(self)}:{self.arcs}>'


def star_stops(dg: nx.DiGraph, root, leaves) -> int:
    source = dg.nodes[root]['source']
    return len({dg.nodes[u]['source'] for u in leaves} - {source})


def check_matching(dg: nx.DiGraph, m: Matching):
    """Raise InvariantBreach unless every star of `m` fits its root."""
    for leaf, root in m.arcs:
        if not dg.has_edge(leaf, root):
            raise InvariantBreach(f'Matched arc ({leaf}, {root}) is not in the serve digraph')
        if m.root_of(root) is not None:
            raise InvariantBreach(f'Root {root} is also a leaf')
    for root in m.roots():
        leaves = m.leaves(root)
        if len(leaves) > dg.nodes[root]['capacity']:
            raise InvariantBreach(f'Star at {root} exceeds capacity')
        if star_stops(dg, root, leaves) > dg.nodes[root]['stop_limit']:
            raise InvariantBreach(f'Star at {root} exceeds stop limit')


def greedy_star(dg: nx.DiGraph, v, m: Matching, *, caps=None, stops=None) -> Star:
    """Largest star at `v` over in-neighbours outside V(M).

    Same-source in-neighbours are taken first since they cost no stop; then
    whole source groups, largest first, while seats and stops remain.

    :param caps: capacity override per vertex (default: node attribute)
    :param stops: stop limit override per vertex (default: node attribute)
    """
    if v not in dg:
        raise SpecError(f'Unknown vertex: {v}')
    c = caps[v] if caps is not None else dg.nodes[v]['capacity']
    delta = stops[v] if stops is not None else dg.nodes[v]['stop_limit']
    groups = in_neighbours_by_source(dg, v, exclude=m.vertices())
    leaves = []
    own = groups.pop(dg.nodes[v]['source'], [])
    take = own[:c]
    leaves.extend(take)
    c -= len(take)
    used = 0
    remaining = sorted(groups.values(), key=lambda g: (-len(g), g[0]))
    for group in remaining:
        if c <= 0 or used >= delta:
            break
        take = group[:c]
        leaves.extend(take)
        c -= len(take)
        used += 1
    return Star(v, frozenset(leaves), used)


def is_improvement(st: Star, m: Matching) -> bool:
    """Would adopting `st` (and dropping M(V(st))) grow the matching?"""
    return len(st.leaves) - sum(m.count(u) for u in st.leaves) > m.count(st.root)


def improve_matching(dg: nx.DiGraph, m: Optional[Matching] = None, *, caps=None, stops=None):
    """Scan vertices in ascending order, applying improving stars until none is left.

    :return: (matching, improvements applied, full passes)
    """
    m = m.copy() if m is not None else Matching()
    vertices = sorted(dg, key=natural_key)
    improvements = 0
    passes = 0
    improved = True
    while improved:
        improved = False
        passes += 1
        for v in vertices:
            star = greedy_star(dg, v, m, caps=caps, stops=stops)
            if star.leaves and is_improvement(star, m):
                before = len(m)
                m.apply(star)
                if len(m) <= before:
                    raise InvariantBreach(f'Improvement at {v} did not grow the matching')
                improvements += 1
                logger.debug(f'Improvement at {v}: {sorted(star.leaves)} (|M|={len(m)})')
                improved = True
                break
        if improvements > len(vertices):
            raise InvariantBreach('More improvements than trips')
    return m, improvements, passes


def check_mcmp_conditions(inst: Instance):
    violated = inst.condition_flags.violated(2, 3, 5)
    if violated:
        raise PreconditionError(violated[0], f'condition {violated[0]} does not hold'
                                             f' (conditions {inst.condition_flags})')


def matching_to_solution(inst: Instance, m: Matching) -> Solution:
    served = {v: set() for v in inst.ids if m.root_of(v) is None}
    for leaf, root in m.arcs:
        served[root].add(leaf)
    return Solution.from_served(inst, served)


def star_improve(inst: Instance, *, dg: Optional[nx.DiGraph] = None, stats: Optional[dict] = None) -> Solution:
    """Minimize drivers by growing a carpool matching with improving stars.

    :param stats: if given, filled with 'improvements', 'passes' and 'passengers'
    """
    check_mcmp_conditions(inst)
    start = time.time()
    if dg is None:
        dg = build_serve_digraph(inst)
    m, improvements, passes = improve_matching(dg)
    check_matching(dg, m)
    sol = matching_to_solution(inst, m)
    logger.info(f'StarImprove: {len(sol)} drivers, {len(m)} passengers,'
                f' {improvements} improvements over {passes} passes ({time.time() - start:.2f}s)')
    if stats is not None:
        stats.update(improvements=improvements, passes=passes, passengers=len(m))
    return sol
