from ridemin.gen.partition import (ThreePartitionSpec, gen_3partition_stop, gen_3partition_stop_scaled,
                                   gen_3partition_time, gen_3partition_time_scaled, gadget_network,
                                   is_three_partition, passenger_source, yes_solution_served)
from ridemin.gen.random_tree import RandomTreeSpec, gen_random_tree

GENERATORS = ('3p-stop', '3p-stop-scaled', '3p-time', '3p-time-scaled', 'random')
