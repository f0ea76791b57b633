from ridemin.algo.star import Star, Matching, greedy_star, is_improvement, improve_matching, star_improve
from ridemin.algo.swap import edge_swap, greedy_matching
from ridemin.algo.phases import (PhaseState, TraceEntry, partition_trips, phase1, phase2, phase3,
                                 solve_phases)
from ridemin.algo.oracle import (OracleBudget, exact_min_drivers, exact_min_distance, exact_max_matching,
                                 forced_drivers)
from ridemin.algo.result import RunReport, REPORT_HEADER

ALGORITHMS = ('star-improve', 'edge-swap', 'phase', 'exact')
