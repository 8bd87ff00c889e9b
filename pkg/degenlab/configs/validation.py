from __future__ import unicode_literals

from degenlab.exceptions import InvalidInputError
from degenlab.solver.grid import MIN_GRID_SIZE


def check_positive(name, value):
    if not value > 0:
        raise InvalidInputError("%s must be positive, got %r" % (name, value))
    return value


def check_grid_size(name, value):
    if int(value) != value or value < MIN_GRID_SIZE:
        raise InvalidInputError("%s must be an integer >= %d, got %r"
                                % (name, MIN_GRID_SIZE, value))
    return int(value)


def check_non_empty(name, values):
    values = list(values)
    if not values:
        raise InvalidInputError("%s must not be empty" % name)
    return values
