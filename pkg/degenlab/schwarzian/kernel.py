"""Quadrature of the derivative of the Bers embedding

At the identity the derivative in the direction nu is the quadratic form

    z -> -(6 / pi) * integral over the unit disk of nu(zeta) / (z - zeta)^4

evaluated here at points outside the closed unit disk, where the kernel is
smooth on the integration region.
"""
from __future__ import division, unicode_literals

import logging
from builtins import object, range
from math import pi

import numpy as np

from degenlab.common.log_utils import log_elapsed_time
from degenlab.exceptions import DomainError, InvalidInputError

logger = logging.getLogger(__name__)

KERNEL_FACTOR = -6.0 / pi
MIN_CELLS = 8


class KernelResult(object):
    """Kernel value at *z* with the difference to the half-resolution run
    as error estimate"""

    def __init__(self, z, value, cells, error_estimate):
        self.z = z
        self.value = value
        self.cells = cells
        self.error_estimate = error_estimate

    def to_dict(self):
        return {
            "z": self.z,
            "value": self.value,
            "cells": self.cells,
            "error_estimate": self.error_estimate
        }

    def __repr__(self):
        return "KernelResult(z=%r, value=%r, cells=%r, error_estimate=%r)" % (
            self.z, self.value, self.cells, self.error_estimate)


def _midpoint_disk_sum(integrand, cells, chunk_rows):
    # midpoint rule on the cells of [-1, 1]^2 whose centre lies in the disk
    step = 2.0 / cells
    centres = -1 + step * (np.arange(cells) + 0.5)
    total = 0j
    for start in range(0, cells, chunk_rows):
        y = centres[start:start + chunk_rows]
        zeta = centres[None, :] + 1j * y[:, None]
        inside = np.abs(zeta) < 1
        total += np.sum(integrand(zeta[inside]))
    return complex(total * step ** 2)


def _check_inputs(z, cells):
    if cells < MIN_CELLS or cells % 2:
        raise InvalidInputError("Cell count must be an even integer >= %d, "
                                "got %r" % (MIN_CELLS, cells))
    if abs(z) <= 1:
        raise DomainError("Kernel point must satisfy |z| > 1, got %r" % (z,))


def _with_error_estimate(integrand, z, cells, chunk_rows):
    value = KERNEL_FACTOR * _midpoint_disk_sum(integrand, cells, chunk_rows)
    coarse = KERNEL_FACTOR * _midpoint_disk_sum(integrand, cells // 2,
                                                chunk_rows)
    result = KernelResult(complex(z), value, cells, abs(value - coarse))
    logger.debug("%r", result)
    return result


@log_elapsed_time(logger, logging.DEBUG,
                  "Kernel quadrature done in {elapsed_time:.3f}s")
def bers_derivative_kernel(nu, z, cells=2048, chunk_rows=128):
    """Midpoint-rule value of ``-(6/pi) int_D nu(zeta) / (z - zeta)^4 dA``

    Args:
        nu (callable): vectorized Beltrami differential on the unit disk
        z (complex): point with ``|z| > 1``
        cells (int): number of cells per side of ``[-1, 1]^2``

    Returns:
        :class:`KernelResult`

    Raises:
        DomainError: when ``|z| <= 1``
    """
    _check_inputs(z, cells)

    def integrand(zeta):
        return nu(zeta) / (z - zeta) ** 4

    return _with_error_estimate(integrand, z, cells, chunk_rows)


@log_elapsed_time(logger, logging.DEBUG,
                  "Pushed kernel quadrature done in {elapsed_time:.3f}s")
def pushed_derivative_kernel(nu, z, base_map, base_derivative, cells=2048,
                             chunk_rows=128):
    """Kernel at a conformal base map w,
    ``-(6/pi) int_D nu(zeta) w'(zeta)^2 / (w(z) - w(zeta))^4 dA``

    With ``w`` the identity this reduces to :func:`bers_derivative_kernel`.
    The caller guarantees that ``w(z)`` lies outside ``w(D)``.
    """
    _check_inputs(z, cells)
    w_z = base_map(z)

    def integrand(zeta):
        return nu(zeta) * base_derivative(zeta) ** 2 \
               / (w_z - base_map(zeta)) ** 4

    return _with_error_estimate(integrand, z, cells, chunk_rows)
