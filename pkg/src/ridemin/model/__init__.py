from ridemin.model.network import RoadNetwork, INFINITY, shortest_distance, path_length, is_simple_path
from ridemin.model.trip import Trip, Pickup, PickupPlan
from ridemin.model.instance import Instance, Conditions, check_conditions
from ridemin.model.schedule import (count_stops, feasible_schedule, cheapest_schedule, can_serve, route_serves,
                                    infeasibility_kind, MAX_DETOUR_PASSENGERS)
from ridemin.model.solution import (Solution, Assignment, ValidationReport, validate_solution,
                                    solution_metrics, VIOLATION_KINDS)
