"""Hyperbolic geometry of the flat cylinders C(H) = {|Im z| < H} / (z ~ z+2pi)

All lengths are hyperbolic lengths for the complete metric of the cylinder
obtained after stretching by the time ``t`` deformation, whose half-height is
``(1 + a t) H``.
"""
from __future__ import division, unicode_literals

import logging
from math import cos, log, pi

import mpmath
import numpy as np
from scipy.optimize import brentq

from degenlab.common.from_dict import FromDict
from degenlab.common.utils import as_scalar_or_array
from degenlab.constants import (
    DEFAULT_BAND_FRACTION, INJECTIVITY_HEIGHT_THRESHOLD, X_PERIOD)
from degenlab.exceptions import ContractViolation, DomainError

logger = logging.getLogger(__name__)


class CylinderSpec(FromDict):
    """Flat cylinder of half-height *H* with a central band of relative
    height *a*

    Args:
        H (float): half-height, positive
        a (float, optional): band fraction in (0, 1), defaults to 1/2
    """

    x_period = X_PERIOD

    def __init__(self, H, a=DEFAULT_BAND_FRACTION):
        if not H > 0:
            raise DomainError("Half-height must be positive, got %r" % H)
        if not 0 < a < 1:
            raise DomainError("Band fraction must lie in (0, 1), got %r" % a)
        self.H = float(H)
        self.a = float(a)

    @property
    def modulus(self):
        return self.H / pi

    def halfheight(self, t):
        """Half-height of the cylinder after the time *t* stretch"""
        check_time(t)
        return (1 + self.a * t) * self.H

    def to_dict(self):
        return {"H": self.H, "a": self.a}

    def __eq__(self, other):
        return isinstance(other, CylinderSpec) \
               and self.to_dict() == other.to_dict()

    def __ne__(self, other):
        return not self.__eq__(other)

    def __repr__(self):
        return "CylinderSpec(H=%r, a=%r)" % (self.H, self.a)


class InjRadiusReport(object):
    """Upper and lower bounds for the injectivity radius over the stretched
    central band at time *t*"""

    def __init__(self, t, upper_bound, lower_bound):
        self.t = t
        self.upper_bound = upper_bound
        self.lower_bound = lower_bound

    def to_dict(self):
        return {
            "t": self.t,
            "upper_bound": self.upper_bound,
            "lower_bound": self.lower_bound
        }

    def __repr__(self):
        return "InjRadiusReport(t=%r, upper_bound=%r, lower_bound=%r)" % (
            self.t, self.upper_bound, self.lower_bound)


def check_time(t, upper=1.0):
    if not 0 <= t <= upper:
        raise DomainError("Deformation time must lie in [0, %s], got %r"
                          % (upper, t))


def metric_density(c, t, y):
    """Density of the hyperbolic metric of the time *t* cylinder at height *y*

    Works on scalars and numpy arrays of heights.

    Raises:
        DomainError: when some ``|y|`` reaches the half-height, where the
            density diverges
    """
    h = c.halfheight(t)
    y_arr = np.asarray(y, dtype=float)
    if np.any(np.abs(y_arr) >= h):
        raise DomainError("Height must satisfy |y| < %r, the metric diverges "
                          "at the boundary" % h)
    density = pi / (2 * h * np.cos(pi * y_arr / (2 * h)))
    return as_scalar_or_array(density, y)


def core_length(c, t):
    """Hyperbolic length of the core curve ``x -> x`` of the time *t*
    cylinder, equal to pi^2 / ((1 + a t) H)"""
    return pi ** 2 / c.halfheight(t)


def horizontal_curve_length(c, t):
    """Length of the horizontal closed curve at height ``(1 + t) a H``, the
    boundary of the stretched band

    It bounds the injectivity radius from above on the whole band.
    """
    h = c.halfheight(t)
    angle = c.a * (1 + t) * pi / (2 * (1 + c.a * t))
    return pi ** 2 / (h * cos(angle))


def inj_radius_bounds(c, t):
    """Injectivity-radius bounds over the stretched central band

    The upper bound is :func:`horizontal_curve_length`, the lower bound is
    the core length at the same time. For ``H > 2 sqrt(2) pi^2`` the upper
    bound stays below 1/2 for all times.

    Raises:
        ContractViolation: when the band fraction is not 1/2, the only value
            for which these bounds are established
    """
    if c.a != 0.5:
        raise ContractViolation("Injectivity radius bounds require a = 1/2, "
                                "got a=%r" % c.a)
    return InjRadiusReport(
        t=t,
        upper_bound=horizontal_curve_length(c, t),
        lower_bound=core_length(c, t))


def construction_pair_ratio(H):
    """Ratio between the injectivity bounds of the fully stretched cylinder
    and of the unstretched one, which equals 2 sqrt(2) / 3 for every H"""
    c = CylinderSpec(H, 0.5)
    return inj_radius_bounds(c, 1.0).upper_bound \
           / inj_radius_bounds(c, 0.0).upper_bound


def collar_width(l):
    """Half-width of the standard collar around a geodesic of length *l*

    Evaluates ``log(coth(l / 4))`` as ``log1p(2 / expm1(l / 2))``, which
    stays accurate both for tiny lengths and for long geodesics.

    Raises:
        DomainError: when some length is not positive
    """
    l_arr = np.asarray(l, dtype=float)
    if np.any(l_arr <= 0):
        raise DomainError("Geodesic length must be positive")
    width = np.log1p(2.0 / np.expm1(l_arr / 2.0))
    return as_scalar_or_array(width, l)


def collar_width_naive(l, dps=None):
    """Literal collar formula ``1/2 log((cosh(l/2) + 1) / (cosh(l/2) - 1))``

    In double precision the subtraction cancels for small *l*. When *dps* is
    given the formula is evaluated by mpmath with that many digits and only
    the result is rounded to a float.
    """
    if l <= 0:
        raise DomainError("Geodesic length must be positive, got %r" % l)
    if dps is None:
        ch = np.cosh(l / 2.0)
        return 0.5 * log((ch + 1) / (ch - 1))
    with mpmath.workdps(dps):
        ch = mpmath.cosh(mpmath.mpf(l) / 2)
        return float(mpmath.log((ch + 1) / (ch - 1)) / 2)


def collar_length_for_width(width):
    """Closed-form inverse of :func:`collar_width`: ``4 artanh(exp(-w))``"""
    if not width > 0:
        raise DomainError("Collar width must be positive, got %r" % width)
    return 4 * np.arctanh(np.exp(-width))


def collar_threshold(width=INJECTIVITY_HEIGHT_THRESHOLD, rtol=1e-14):
    """Geodesic length whose collar has half-width *width*, by bisection in
    log-length on the stable collar formula"""
    if not width > 0:
        raise DomainError("Collar width must be positive, got %r" % width)

    def residual(log_length):
        return collar_width(np.exp(log_length)) - width

    log_length = brentq(residual, log(1e-300), log(1e3), rtol=rtol)
    threshold = float(np.exp(log_length))
    logger.debug("Collar threshold for width %r: %r", width, threshold)
    return threshold
