"""
Generate a reduction gadget or a random inverse-tree instance and write it as an instance file.
"""
from loguru import logger

from ridemin.cli.common import configure_logging, exit_code, new_parser
from ridemin.errors import SpecError
from ridemin.gen import (GENERATORS, RandomTreeSpec, ThreePartitionSpec, gen_3partition_stop,
                         gen_3partition_stop_scaled, gen_3partition_time, gen_3partition_time_scaled,
                         gen_random_tree)
from ridemin.gen.partition import MAX_SCALED_TRIPS
from ridemin.io.instance_file import write_instance
from ridemin.model.instance import Instance


def generate(kind, *, r=None, M=None, A=None, per_source=None, max_trips=MAX_SCALED_TRIPS,
             trips=None, nodes=None, max_capacity=3, max_stops=2, max_edge_length=3, seed=0,
             name=None) -> Instance:
    if kind.startswith('3p-'):
        if r is None or M is None or A is None:
            raise SpecError(f'spec: {kind} needs --r, --M and --A')
        spec = ThreePartitionSpec.parse(r, M, A)
        if kind == '3p-stop':
            inst = gen_3partition_stop(spec)
        elif kind == '3p-stop-scaled':
            inst = gen_3partition_stop_scaled(spec, per_source=per_source, max_trips=max_trips)
        elif kind == '3p-time':
            inst = gen_3partition_time(spec)
        elif kind == '3p-time-scaled':
            inst = gen_3partition_time_scaled(spec, per_source=per_source, max_trips=max_trips)
        else:
            raise SpecError(f'spec: unknown generator "{kind}"')
    elif kind == 'random':
        if trips is None:
            raise SpecError('spec: random needs --trips')
        inst = gen_random_tree(RandomTreeSpec(
            trips=trips, nodes=nodes, max_capacity=max_capacity, max_stops=max_stops,
            max_edge_length=max_edge_length, seed=seed,
        ))
    else:
        raise SpecError(f'spec: unknown generator "{kind}"; expected one of {", ".join(GENERATORS)}')
    if name:
        inst = Instance(inst.network, inst.trips, name=name)
    return inst


def add_arguments(parser):
    parser.add_argument('kind', choices=GENERATORS,
                        help='Gadget or random instance family')
    parser.add_argument('-o', '--out', default='-',
                        help='Instance file to write; default to stdout')
    parser.add_argument('--name', default=None,
                        help='Instance name stored in the file header')
    gadget = parser.add_argument_group('3-partition gadgets')
    gadget.add_argument('--r', type=int, default=None, help='Number of triples')
    gadget.add_argument('--M', type=int, default=None, help='Target triple sum')
    gadget.add_argument('--A', default=None, help='Comma-separated 3r integers, e.g. 2,2,3,2,2,3')
    gadget.add_argument('--per-source', dest='per_source', type=int, default=None,
                        help='Passenger trips per chain vertex in scaled gadgets (default rM^2)')
    gadget.add_argument('--max-trips', dest='max_trips', type=int, default=MAX_SCALED_TRIPS,
                        help='Refuse scaled gadgets larger than this')
    rand = parser.add_argument_group('random inverse trees')
    rand.add_argument('-l', '--trips', type=int, default=None, help='Number of trips')
    rand.add_argument('-p', '--nodes', type=int, default=None, help='Number of source vertices')
    rand.add_argument('--max-capacity', dest='max_capacity', type=int, default=3)
    rand.add_argument('--max-stops', dest='max_stops', type=int, default=2)
    rand.add_argument('--max-edge-length', dest='max_edge_length', type=int, default=3)
    rand.add_argument('--seed', type=int, default=0)


def run(args):
    inst = generate(
        args.kind, r=args.r, M=args.M, A=args.A, per_source=args.per_source, max_trips=args.max_trips,
        trips=args.trips, nodes=args.nodes, max_capacity=args.max_capacity, max_stops=args.max_stops,
        max_edge_length=args.max_edge_length, seed=args.seed, name=args.name,
    )
    write_instance(inst, args.out)
    logger.info(f'{inst.name}: {len(inst)} trips, {len(inst.network.vertices)} vertices'
                f' (conditions {inst.condition_flags})')
    return 0


def generate_cli(argv=None):
    parser = new_parser(__doc__)
    add_arguments(parser)
    args = parser.parse_args(argv)
    configure_logging(args.verbose)
    return exit_code(run, args)
