"""
Validate a solution file against its instance.
"""
import sys

from ridemin.cli.validate import validate_cli


def main():
    sys.exit(validate_cli())


if __name__ == '__main__':
    main()
