from ridemin.graph.serve import ServeDigraph, build_serve_digraph, check_transitive, in_neighbours_by_source
from ridemin.graph.meta import MetaGraph, build_meta_graph, label_nodes, meta_queries, is_inverse_tree
