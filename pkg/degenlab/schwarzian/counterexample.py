"""Quasiconformal maps ``f_lambda`` whose Schwarzians stay at Bers distance
6 from ``S(f_1)`` however close lambda gets to 1"""
from __future__ import division, unicode_literals

import logging
from builtins import object
from cmath import phase

import numpy as np

from degenlab.common.log_utils import (
    DifferedLoggingMessage, format_table, log_elapsed_time)
from degenlab.exceptions import DomainError, InvalidInputError
from degenlab.schwarzian.bers_norm import ExteriorGrid, bers_norm_exterior
from degenlab.schwarzian.maps import LambdaMap
from degenlab.schwarzian.schwarzian import QuadraticForm

logger = logging.getLogger(__name__)

COUNTEREXAMPLE_NORM = 6.0


def _check_real_lambda(lam):
    if not 0 <= lam < 1:
        raise DomainError("lambda must lie in [0, 1), got %r" % (lam,))


def radial_factor(x, lam):
    """``h_lambda(x) = (x^4 - lambda) / (x^2 - lambda)^2``

    Example:

        >>> radial_factor(1.0, 0.5)
        2.0
    """
    _check_real_lambda(lam)
    x = np.asarray(x, dtype=float)
    values = (x ** 4 - lam) / (x ** 2 - lam) ** 2
    return values.item() if values.ndim == 0 else values


def radial_factor_derivative(x, lam):
    """``h'_lambda(x) = 4 lambda x (1 - x^2) / (x^2 - lambda)^3``"""
    _check_real_lambda(lam)
    x = np.asarray(x, dtype=float)
    values = 4 * lam * x * (1 - x ** 2) / (x ** 2 - lam) ** 3
    return values.item() if values.ndim == 0 else values


def radial_factor_maximum(lam):
    """Value ``1 / (1 - lambda)`` of ``h_lambda`` at ``x = 1``, its maximum
    over ``x >= 1``"""
    _check_real_lambda(lam)
    return 1.0 / (1.0 - lam)


def counterexample_form(lam):
    """``S(f_lambda) - S(f_u)`` where ``u = lambda / |lambda|`` (u = 1 for
    lambda = 0)"""
    if not abs(lam) < 1:
        raise DomainError("|lambda| must be < 1, got %r" % (lam,))
    unit = lam / abs(lam) if lam != 0 else 1.0
    return QuadraticForm.schwarzian_of(LambdaMap(lam)) \
           - QuadraticForm.schwarzian_of(LambdaMap(unit))


class CounterexampleRow(object):
    header = ["lambda_re", "lambda_im", "norm", "argmax_re", "argmax_im",
              "radial_max_error", "radial_decreasing", "holds"]

    def __init__(self, lam, estimate, radial_max_error, radial_decreasing,
                 holds):
        self.lam = complex(lam)
        self.estimate = estimate
        self.radial_max_error = radial_max_error
        self.radial_decreasing = radial_decreasing
        self.holds = holds

    def row(self):
        return [self.lam.real, self.lam.imag, self.estimate.value,
                self.estimate.argmax.real, self.estimate.argmax.imag,
                self.radial_max_error, self.radial_decreasing, self.holds]


class CounterexampleTable(object):
    header = CounterexampleRow.header

    def __init__(self, entries, grid_size, tolerance):
        self.entries = entries
        self.grid_size = grid_size
        self.tolerance = tolerance

    @property
    def holds(self):
        return all(e.holds for e in self.entries)

    @property
    def min_norm(self):
        return min(e.estimate.value for e in self.entries)

    def rows(self):
        return [e.row() for e in self.entries]

    def to_dict(self):
        return {
            "grid_size": self.grid_size,
            "tolerance": self.tolerance,
            "rows": [dict(zip(self.header, r)) for r in self.rows()],
            "holds": self.holds
        }


def _radial_checks(modulus, samples):
    # h_r is only defined for real r; complex lambda reduce to |lambda|
    # after the rotation by arg(lambda) / 2
    max_error = abs(radial_factor(1.0, modulus)
                    - radial_factor_maximum(modulus))
    if modulus == 0:
        return max_error, True
    xs = np.linspace(1.0, 3.0, samples)[1:]
    decreasing = bool(np.all(radial_factor_derivative(xs, modulus) < 0))
    return max_error, decreasing


@log_elapsed_time(logger, logging.INFO,
                  "Counterexample scan done in {elapsed_time:.3f}s")
def counterexample_scan(lambda_list, grid_size=400, tolerance=1e-3,
                        r_max=10.0, delta_min=1e-7, radial_tolerance=1e-9):
    """Estimates ``||S(f_lambda) - S(f_u)||`` for each lambda on a
    ``grid_size x grid_size`` exterior grid, ``u = lambda / |lambda|``

    Complex lambda are handled by rotating the grid by ``arg(lambda) / 2``,
    along which the extremal behaviour of the real case is carried. The
    radial factor ``h_|lambda|`` is checked for its maximum at ``x = 1`` and
    for being decreasing on ``(1, 3]``.

    Returns:
        :class:`CounterexampleTable`
    """
    if not lambda_list:
        raise InvalidInputError("Empty lambda list")
    if tolerance <= 0:
        raise InvalidInputError("Tolerance must be positive")
    entries = []
    for lam in lambda_list:
        lam = complex(lam) if isinstance(lam, complex) else float(lam)
        modulus = abs(lam)
        if not modulus < 1:
            raise DomainError("|lambda| must be < 1, got %r" % (lam,))
        grid = ExteriorGrid(grid_size, grid_size, r_max, delta_min,
                            phase=phase(lam) / 2 if lam != 0 else 0.0)
        estimate = bers_norm_exterior(counterexample_form(lam), grid)
        max_error, decreasing = _radial_checks(modulus, grid_size)
        holds = estimate.value >= COUNTEREXAMPLE_NORM - tolerance \
                and max_error <= radial_tolerance and decreasing
        entries.append(CounterexampleRow(lam, estimate, max_error,
                                         decreasing, holds))
    table = CounterexampleTable(entries, grid_size, tolerance)
    logger.info("Counterexample norms:\n%s", DifferedLoggingMessage(
        format_table, table.header, table.rows()))
    return table
