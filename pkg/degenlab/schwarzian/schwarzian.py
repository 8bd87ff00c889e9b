"""Schwarzian derivatives and holomorphic quadratic forms on the exterior
of the unit disk"""
from __future__ import division, unicode_literals

import logging
from builtins import object
from cmath import exp as cexp
from functools import partial
from math import factorial

import numpy as np

from degenlab.common.utils import as_scalar_or_array
from degenlab.exceptions import InvalidInputError, PoleError

logger = logging.getLogger(__name__)

PIVOT_TOLERANCE = 1e-12

RING = "ring"
CENTRAL = "central"


def schwarzian_closed(fprime, fsecond, fthird, z):
    """Schwarzian ``f'''/f' - 3/2 (f''/f')^2`` from derivative evaluators

    Args:
        fprime, fsecond, fthird (callable): first three derivatives of f
        z (complex or array): evaluation point(s)

    Raises:
        PoleError: when ``f'(z) = 0``

    Example:

        >>> s = schwarzian_closed(lambda z: 1 - 0.5 / z ** 2,
        ...                       lambda z: 1.0 / z ** 3,
        ...                       lambda z: -3.0 / z ** 4, 2.0)
        >>> round(s.real, 4)
        -0.2449
    """
    z_array = np.asarray(z, dtype=complex)
    d1 = np.asarray(fprime(z_array), dtype=complex)
    if np.any(d1 == 0):
        raise PoleError(z_array[d1 == 0].ravel()[0] if d1.ndim
                        else z_array.item())
    ratio = np.asarray(fsecond(z_array)) / d1
    values = np.asarray(fthird(z_array)) / d1 - 1.5 * ratio ** 2
    return as_scalar_or_array(values, z)


def schwarzian(analytic_map, z):
    """Closed-form Schwarzian of an :class:`.AnalyticMap`"""
    return schwarzian_closed(partial(analytic_map.derivative, order=1),
                             partial(analytic_map.derivative, order=2),
                             partial(analytic_map.derivative, order=3), z)


def _ring_derivatives(f, z, h, nodes):
    # Taylor coefficients from the discrete Fourier transform of samples
    # on the circle of radius h around z
    roots = np.exp(2j * np.pi * np.arange(nodes) / nodes)
    coefficients = np.fft.fft(f(z + h * roots)) / nodes
    return [factorial(m) * coefficients[m] / h ** m for m in (1, 2, 3)]


def _central_derivatives(f, z, h):
    f_m2, f_m1, f_0, f_p1, f_p2 = [f(z + k * h) for k in (-2, -1, 0, 1, 2)]
    d1 = (f_p1 - f_m1) / (2 * h)
    d2 = (f_p1 - 2 * f_0 + f_m1) / h ** 2
    d3 = (f_p2 - 2 * f_p1 + 2 * f_m1 - f_m2) / (2 * h ** 3)
    return [d1, d2, d3]


def schwarzian_fd(f, z, h=0.1, method=RING, nodes=16):
    """Finite-difference Schwarzian of a map known only through values

    With ``method="ring"`` the derivatives are read from the Fourier
    coefficients of ``f(z + h e^{2 i pi k / nodes})``, which are exact up to
    aliasing of order ``(h / rho)^nodes`` when f is analytic on a disk of
    radius rho around z. ``method="central"`` uses the classic centred
    differences along the real direction, with an ``O(h^2)`` error.

    Raises:
        PoleError: when the estimated ``f'(z)`` is numerically zero
    """
    if h <= 0:
        raise InvalidInputError("Step must be positive, got %r" % h)
    if method == RING:
        if nodes < 8:
            raise InvalidInputError("Ring stencil needs at least 8 nodes, "
                                    "got %r" % nodes)
        d1, d2, d3 = _ring_derivatives(f, complex(z), h, nodes)
    elif method == CENTRAL:
        d1, d2, d3 = _central_derivatives(f, complex(z), h)
    else:
        raise InvalidInputError("Unknown finite-difference method %r"
                                % method)
    if abs(d1) <= PIVOT_TOLERANCE:
        raise PoleError(z)
    ratio = d2 / d1
    return complex(d3 / d1 - 1.5 * ratio ** 2)


class QuadraticForm(object):
    """Holomorphic quadratic form ``phi(z) dz^2`` on ``|z| > 1``

    Args:
        evaluator (callable): vectorized complex function
        description (str): provenance label echoed in reports
    """

    def __init__(self, evaluator, description):
        self.evaluator = evaluator
        self.description = description

    @classmethod
    def zero(cls):
        return cls(lambda z: np.zeros_like(np.asarray(z, dtype=complex)),
                   "0")

    @classmethod
    def schwarzian_of(cls, analytic_map):
        return cls(partial(schwarzian, analytic_map),
                   "S(%r)" % (analytic_map,))

    def __call__(self, z):
        return self.evaluator(z)

    def __sub__(self, other):
        return QuadraticForm(lambda z: self(z) - other(z),
                             "%s - %s" % (self.description,
                                          other.description))

    def rotated(self, theta):
        """Pull-back by the rotation ``z -> e^{i theta} z``, which keeps the
        weighted norm"""
        rotation = cexp(1j * theta)
        return QuadraticForm(lambda z: self(rotation * z) * rotation ** 2,
                             "rot(%s, %r)" % (self.description, theta))

    def __repr__(self):
        return "QuadraticForm(%s)" % self.description
