"""
Compare solvers over a set of instance files.
"""
import sys

from ridemin.cli.compare import compare_cli


def main():
    sys.exit(compare_cli())


if __name__ == '__main__':
    main()
