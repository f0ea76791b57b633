"""Ridesharing solvers that choose drivers for a set of trips, minimizing drivers or distance driven."""
__version__ = '0.1.0'
