from __future__ import division, unicode_literals

import logging
from math import pi

import numpy as np

from degenlab.common.log_utils import (
    DifferedLoggingMessage, format_table, log_elapsed_time)
from degenlab.exceptions import InvalidInputError
from degenlab.solver.beltrami_solver import (
    Normalization, modulus_of_continuity_bound, solve)
from degenlab.solver.grid import GridGeometry, sample_function

logger = logging.getLogger(__name__)


def indicator_k_l1_norm(n):
    """L1 norm over the unit disk of the dilatation of
    ``(1 - 1/n) * indicator(|z| < 1/n)``

    Inside the small disk the dilatation is ``2n - 1``, outside it is 1.

    Example:

        >>> round(indicator_k_l1_norm(10) / pi, 12)
        1.18
    """
    if n < 1:
        raise InvalidInputError("Stage must be >= 1, got %r" % n)
    return pi * (2 * n - 1) / n ** 2 + pi * (1 - 1.0 / n ** 2)


def indicator_coefficient(n, centre):
    radius = 1.0 / n
    value = 1.0 - 1.0 / n

    def coefficient(z):
        return np.where(np.abs(z - centre) < radius, value, 0.0)

    return coefficient


class ConvergenceTable(object):
    """Per-stage results of the convergence-to-identity experiment"""

    header = ["n", "sup_distance", "k_l1_norm", "continuity_bound",
              "residual_norm"]

    def __init__(self, rows):
        self._rows = rows

    def rows(self):
        return [list(r) for r in self._rows]

    @property
    def sup_distances(self):
        return [r[1] for r in self._rows]

    @property
    def strictly_decreasing(self):
        d = self.sup_distances
        return all(b < a for a, b in zip(d, d[1:]))

    @property
    def final_ratio(self):
        """``d[-1] / d[0]``, or None when the first stage already solves to
        the identity"""
        d = self.sup_distances
        if d[0] == 0:
            return None
        return d[-1] / d[0]

    def to_dict(self):
        return {
            "rows": [dict(zip(self.header, r)) for r in self._rows],
            "strictly_decreasing": self.strictly_decreasing,
            "final_ratio": self.final_ratio
        }


@log_elapsed_time(logger, logging.INFO,
                  "Convergence experiment done in {elapsed_time:.3f}s")
def convergence_experiment(n_list, grid_size=128, supersample=8,
                           centre=complex(pi, 0.0)):
    """Solves ``f_zbar = mu_n f_z`` for shrinking disk coefficients
    ``mu_n = (1 - 1/n) * indicator(|z - centre| < 1/n)`` on a fixed grid
    of the cylinder ``[0, 2pi) x [-pi, pi]``, pinned to the identity on the
    boundary rows, and records ``sup |f_n - id|``

    Cells cut by the disk boundary receive the covered fraction of the
    value, estimated with ``supersample**2`` points per cell.
    """
    if len(n_list) < 2:
        raise InvalidInputError("The experiment needs at least two stages")
    geometry = GridGeometry(grid_size, grid_size, -pi, pi)
    normalization = Normalization.identity()
    rows = []
    for n in n_list:
        mu = sample_function(indicator_coefficient(n, centre), geometry,
                             supersample)
        solution = solve(mu, normalization)
        k_norm = indicator_k_l1_norm(n)
        rows.append((
            n, solution.sup_distance_to_identity(), k_norm,
            modulus_of_continuity_bound(centre, centre + 1, k_norm),
            solution.residual_norm))
    table = ConvergenceTable(rows)
    logger.info("Convergence experiment:\n%s", DifferedLoggingMessage(
        format_table, ConvergenceTable.header, table.rows()))
    return table
