"""
The serve digraph: one vertex per trip, arc (j, i) when trip i can serve trip j.

In-neighbours of a vertex are therefore its potential passengers, which is the
orientation the matching solvers work in.
"""
from typing import Optional, Tuple

import networkx as nx
from loguru import logger

from ridemin.model.instance import Instance
from ridemin.model.schedule import feasible_schedule
from ridemin.util import natural_key

ServeDigraph = nx.DiGraph


def build_serve_digraph(inst: Instance, limits=True) -> ServeDigraph:
    """
    :param limits: when False, seat and stop limits are ignored and the arcs
        describe the route relation only
    """
    dg = nx.DiGraph(limits=limits)
    for trip in inst:
        dg.add_node(trip.id, source=trip.source, capacity=trip.capacity, stop_limit=trip.stop_limit)
    by_source = {}
    for trip in inst:
        by_source.setdefault(trip.source, []).append(trip.id)
    for driver in inst:
        if limits and driver.capacity == 0:
            continue
        if driver.detour_limit == 0:
            reachable = {v for path in driver.preferred_paths for v in path}
            candidates = (j for v in reachable for j in by_source.get(v, ()))
        else:
            candidates = inst.ids
        for j in candidates:
            if j != driver.id and feasible_schedule(inst, driver.id, (j,), limits=limits) is not None:
                dg.add_edge(j, driver.id)
    logger.debug(f'Serve digraph: {dg.number_of_nodes()} trips, {dg.number_of_edges()} arcs (limits={limits})')
    return dg


def check_transitive(dg: nx.DiGraph) -> Optional[Tuple[int, int, int]]:
    """Return a triple (k, j, i) with arcs k->j and j->i but no k->i, or None."""
    for k in sorted(dg, key=natural_key):
        for j in sorted(dg.successors(k), key=natural_key):
            for i in sorted(dg.successors(j), key=natural_key):
                if i != k and not dg.has_edge(k, i):
                    return k, j, i
    return None


def in_neighbours_by_source(dg: nx.DiGraph, v, exclude=()):
    """Group the in-neighbours of `v` (its potential passengers) by source vertex."""
    groups = {}
    for u in sorted(dg.predecessors(v)):
        if u not in exclude:
            groups.setdefault(dg.nodes[u]['source'], []).append(u)
    return groups
