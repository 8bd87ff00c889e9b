from __future__ import division, unicode_literals

import logging
from builtins import object
from math import log, pi

import numpy as np

from degenlab.common.log_utils import log_elapsed_time
from degenlab.exceptions import InvalidInputError

logger = logging.getLogger(__name__)


class ExteriorGrid(object):
    """Polar sampling of ``1 < |z| <= r_max``

    Radii are ``1 + delta`` with delta geometrically spaced between
    *delta_min* and ``r_max - 1``, so samples concentrate near the unit
    circle. Angles are ``phase + 2 pi k / n_angular``; with the default
    phase the real axis is sampled.
    """

    def __init__(self, n_radial, n_angular, r_max=10.0, delta_min=1e-7,
                 phase=0.0):
        if n_radial < 2 or n_angular < 1:
            raise InvalidInputError("Exterior grid needs at least 2 radii "
                                    "and 1 angle")
        if not 0 < delta_min < r_max - 1:
            raise InvalidInputError("Need 0 < delta_min < r_max - 1, got "
                                    "delta_min=%r, r_max=%r"
                                    % (delta_min, r_max))
        self.n_radial = int(n_radial)
        self.n_angular = int(n_angular)
        self.r_max = float(r_max)
        self.delta_min = float(delta_min)
        self.phase = float(phase)

    @property
    def deltas(self):
        span = log((self.r_max - 1) / self.delta_min)
        fractions = np.arange(self.n_radial) / (self.n_radial - 1)
        return self.delta_min * np.exp(span * fractions)

    @property
    def angles(self):
        return self.phase + 2 * pi * (np.arange(self.n_angular)
                                      / self.n_angular)

    def points(self):
        """Complex samples, shape ``(n_radial, n_angular)``"""
        radii = 1 + self.deltas
        return radii[:, None] * np.exp(1j * self.angles)[None, :]

    def weights(self):
        """``(|z|^2 - 1)^2`` at the samples, computed as
        ``((r - 1) (r + 1))^2`` from the rounded radii ``r = 1 + delta``"""
        radii = 1 + self.deltas
        return np.repeat(((radii - 1) * (radii + 1))[:, None] ** 2,
                         self.n_angular, axis=1)

    def refined(self):
        """Grid containing every sample of this one"""
        return ExteriorGrid(2 * self.n_radial - 1, 2 * self.n_angular,
                            self.r_max, self.delta_min, self.phase)

    def to_dict(self):
        return {
            "n_radial": self.n_radial,
            "n_angular": self.n_angular,
            "r_max": self.r_max,
            "delta_min": self.delta_min,
            "phase": self.phase
        }


class NormEstimate(object):
    """Grid lower bound of a weighted sup-norm with its maximizing
    sample"""

    def __init__(self, value, argmax):
        self.value = value
        self.argmax = argmax

    def to_dict(self):
        return {"value": self.value, "argmax": self.argmax}

    def __repr__(self):
        return "NormEstimate(value=%r, argmax=%r)" % (self.value, self.argmax)


@log_elapsed_time(logger, logging.DEBUG,
                  "Bers norm scan done in {elapsed_time:.3f}s")
def bers_norm_exterior(phi, grid):
    """Max over the grid of ``|phi(z)| (|z|^2 - 1)^2``

    Up to the rounding of phi near the unit circle, the result is a lower
    bound of the hyperbolic sup-norm of *phi* on the exterior of the unit
    disk.

    Args:
        phi (callable): vectorized quadratic form, e.g. a
            :class:`.QuadraticForm`
        grid (:class:`ExteriorGrid`): samples

    Returns:
        :class:`NormEstimate`
    """
    points = grid.points()
    weighted = np.abs(phi(points)) * grid.weights()
    weighted = np.where(np.isfinite(weighted), weighted, -np.inf)
    index = np.unravel_index(np.argmax(weighted), weighted.shape)
    value = float(weighted[index])
    if value == -np.inf:
        value = 0.0
    argmax = complex(points[index])
    logger.debug("Bers norm %.9f at z=%s", value, argmax)
    return NormEstimate(value, argmax)
