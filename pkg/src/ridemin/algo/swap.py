import itertools
import time
from typing import Iterable, Optional, Tuple

import networkx as nx
from loguru import logger

from ridemin.algo.star import (Matching, check_matching, check_mcmp_conditions, greedy_star,
                               matching_to_solution, star_stops)
from ridemin.errors import SpecError
from ridemin.graph.serve import build_serve_digraph
from ridemin.model.instance import Instance
from ridemin.model.solution import Solution
from ridemin.util import natural_key

DEFAULT_MAX_K = 2


def greedy_matching(dg: nx.DiGraph) -> Matching:
    """Maximal matching: each vertex outside V(M), in ascending order, takes its greedy star."""
    m = Matching()
    for v in sorted(dg, key=natural_key):
        if v in m.vertices():
            continue
        star = greedy_star(dg, v, m)
        if star.leaves:
            m.apply(star)
    return m


def _fits(dg, m: Matching, added) -> bool:
    leaves = [leaf for leaf, _ in added]
    if len(set(leaves)) != len(leaves):
        return False
    roots = {root for _, root in added}
    if roots & set(leaves):
        return False
    for root in roots:
        star = m.leaves(root) | {leaf for leaf, r in added if r == root}
        if len(star) > dg.nodes[root]['capacity']:
            return False
        if star_stops(dg, root, star) > dg.nodes[root]['stop_limit']:
            return False
    return True


def find_swap(dg: nx.DiGraph, m: Matching, k: int) -> Optional[Tuple[tuple, tuple]]:
    """First (removed, added) pair that trades i matched arcs for i + 1 new ones, i <= k.

    Removed sets are enumerated lexicographically by arc for i = 0, 1, ..., k.
    """
    matched = m.arcs
    unmatched = sorted((e for e in dg.edges if e not in m), key=lambda e: (natural_key(e[0]), natural_key(e[1])))
    for i in range(k + 1):
        for removed in itertools.combinations(matched, i):
            rest = Matching(a for a in matched if a not in removed)
            taken = rest.vertices()
            leaves_taken = {leaf for leaf, _ in rest.arcs}
            candidates = [
                (u, w) for u, w in unmatched
                if u not in taken and w not in leaves_taken
            ]
            for added in itertools.combinations(candidates, i + 1):
                if _fits(dg, rest, added):
                    return removed, added
    return None


def edge_swap(inst: Instance, k: int = 1, *, initial: Optional[Iterable[Tuple[int, int]]] = None,
              max_k: int = DEFAULT_MAX_K, dg: Optional[nx.DiGraph] = None,
              stats: Optional[dict] = None) -> Solution:
    """Minimize drivers by local search that swaps i matched arcs for i + 1 others.

    :param k: largest number of matched arcs removed in one swap
    :param initial: starting matching arcs (leaf, root); default is a greedy maximal matching
    :param max_k: refuse k above this bound
    """
    if k < 1 or k > max_k:
        raise SpecError(f'EdgeSwap depth k={k} must be between 1 and {max_k}')
    check_mcmp_conditions(inst)
    start = time.time()
    if dg is None:
        dg = build_serve_digraph(inst)
    m = Matching(initial) if initial is not None else greedy_matching(dg)
    check_matching(dg, m)
    swaps = 0
    while True:
        swap = find_swap(dg, m, k)
        if swap is None:
            break
        removed, added = swap
        for leaf, _ in removed:
            m.remove(leaf)
        for leaf, root in added:
            m.add(leaf, root)
        check_matching(dg, m)
        swaps += 1
        logger.debug(f'Swap {swaps}: -{list(removed)} +{list(added)} (|M|={len(m)})')
    sol = matching_to_solution(inst, m)
    logger.info(f'EdgeSwap(k={k}): {len(sol)} drivers, {len(m)} passengers,'
                f' {swaps} swaps ({time.time() - start:.2f}s)')
    if stats is not None:
        stats.update(swaps=swaps, passengers=len(m), matching=m.arcs)
    return sol
