"""
Exceptions raised by ridemin and the exit codes the command line maps them to.
"""


class RideminError(Exception):
    exit_code = 1


class SpecError(RideminError, ValueError):
    """Invalid instance, trip, generator spec or command line parameter."""
    exit_code = 2


class ParseError(SpecError):

    def __init__(self, message, line=None, field=None):
        self.line = line
        self.field = field
        location = []
        if line is not None:
            location.append(f'line {line}')
        if field is not None:
            location.append(f'field "{field}"')
        if location:
            message = f'{", ".join(location)}: {message}'
        super().__init__(message)


class UnknownTripError(SpecError, KeyError):

    def __init__(self, trip_id):
        self.trip_id = trip_id
        super().__init__(f'Unknown trip id: {trip_id}')

    def __str__(self):
        return self.args[0]


class UnknownVertexError(SpecError, KeyError):

    def __init__(self, vertex):
        self.vertex = vertex
        super().__init__(f'Unknown vertex id: {vertex}')

    def __str__(self):
        return self.args[0]


class PreconditionError(RideminError):
    """An algorithm was handed an instance outside its domain.

    `condition` is one of the instance condition numbers (1-5) or a named
    structural requirement ('transitive', 'inverse-tree', 'uniform-nodes').
    """
    exit_code = 3

    def __init__(self, condition, message=None):
        self.condition = condition
        super().__init__(message or f'condition {condition} violated')


class BudgetExceeded(RideminError):
    exit_code = 4

    def __init__(self, message='oracle budget exceeded'):
        super().__init__(message)


class InvariantBreach(RideminError):
    """Internal consistency check failed; always a bug, never bad input."""
    exit_code = 5
