"""
Generate a gadget or random instance file.
"""
import sys

from ridemin.cli.generate import generate_cli


def main():
    sys.exit(generate_cli())


if __name__ == '__main__':
    main()
