"""
Solve an instance file with one of the ridemin solvers.
"""
import sys

from ridemin.cli.solve import solve_cli


def main():
    sys.exit(solve_cli())


if __name__ == '__main__':
    main()
