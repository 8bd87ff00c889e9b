"""L1 domination of holomorphic functions on nested annuli

For ``1 < r1 < r2 < R`` the L1 norm of a holomorphic f on the middle
annulus ``r1 < |z| < r2`` is bounded by ``C_a`` times its L1 norm on the
two flanking annuli ``1 < |z| < r1`` and ``r2 < |z| < R``, with
``C_a = R^2 log(2 r2 / (r1 - 1))``.
"""
from __future__ import division, unicode_literals

import logging
from builtins import object
from math import log, pi

import numpy as np
from future.utils import iteritems
from numpy.polynomial.legendre import leggauss

from degenlab.common.from_dict import FromDict
from degenlab.common.utils import check_random_state
from degenlab.exceptions import DomainError, InvalidInputError, \
    QuadratureError

logger = logging.getLogger(__name__)

RADIAL_NODES = 64
ANGULAR_NODES = 256
QUADRATURE_RTOL = 1e-3


class AnnulusPair(FromDict):
    """Radii ``1 < r0 < r1 < r2 < r3 < R`` of the model annulus
    ``{1 < |z| < R}`` and its middle part ``{r1 < |z| < r2}``

    The auxiliary radii default to ``(1 + r1) / 2`` and ``(r2 + R) / 2``.
    """

    def __init__(self, r1, r2, R, r0=None, r3=None):
        if r0 is None:
            r0 = (1 + r1) / 2
        if r3 is None:
            r3 = (r2 + R) / 2
        if not 1 < r0 < r1 < r2 < r3 < R:
            raise DomainError("Radii must satisfy 1 < r0 < r1 < r2 < r3 < R,"
                              " got r0=%r, r1=%r, r2=%r, r3=%r, R=%r"
                              % (r0, r1, r2, r3, R))
        self.r0 = float(r0)
        self.r1 = float(r1)
        self.r2 = float(r2)
        self.r3 = float(r3)
        self.R = float(R)

    def to_dict(self):
        return {"r0": self.r0, "r1": self.r1, "r2": self.r2, "r3": self.r3,
                "R": self.R}

    def __repr__(self):
        return "AnnulusPair(r1=%r, r2=%r, R=%r)" % (self.r1, self.r2, self.R)


def pudding_constant(pair):
    """``C_a = R^2 log(2 r2 / (r1 - 1))``

    Example:

        >>> round(pudding_constant(AnnulusPair(2, 3, 4)), 3)
        28.668
    """
    return pair.R ** 2 * log(2 * pair.r2 / (pair.r1 - 1))


def aggregate_cq(pair):
    """``C_q = C_a + 1``"""
    return pudding_constant(pair) + 1


def laurent_l1_norm(n, s, t):
    """Exact ``int_{s < |z| < t} |z|^n dA``

    Example:

        >>> round(laurent_l1_norm(0, 2, 3) / pi, 12)
        5.0
    """
    if s <= 0 or t < s:
        raise DomainError("Need 0 < s <= t, got s=%r, t=%r" % (s, t))
    if n == -2:
        return 2 * pi * log(t / s)
    return 2 * pi * (t ** (n + 2) - s ** (n + 2)) / (n + 2)


class LaurentSeries(object):
    """Finite Laurent series ``sum_n c_n z^n``

    Args:
        coefficients (dict): maps integer degrees to coefficients
    """

    def __init__(self, coefficients):
        self.coefficients = {int(n): c for n, c in iteritems(coefficients)
                             if c != 0}

    @classmethod
    def monomial(cls, n, coefficient=1.0):
        return cls({n: coefficient})

    @classmethod
    def random(cls, random_state=None, min_degree=-5, max_degree=5):
        """Real coefficients drawn uniformly in [-1, 1]"""
        if max_degree < min_degree:
            raise InvalidInputError("Empty degree range [%r, %r]"
                                    % (min_degree, max_degree))
        random_state = check_random_state(random_state)
        degrees = range(min_degree, max_degree + 1)
        values = random_state.uniform(-1, 1, size=len(degrees))
        return cls(dict(zip(degrees, values.tolist())))

    @property
    def degrees(self):
        return sorted(self.coefficients)

    @property
    def is_monomial(self):
        return len(self.coefficients) == 1

    def __call__(self, z):
        z = np.asarray(z, dtype=complex)
        values = np.zeros_like(z)
        for n, c in iteritems(self.coefficients):
            values += c * z ** n
        return values

    def to_dict(self):
        return {str(n): c for n, c in iteritems(self.coefficients)}

    @classmethod
    def from_dict(cls, obj_dict):
        return cls({int(n): c for n, c in iteritems(obj_dict)})

    def __repr__(self):
        return "LaurentSeries(%r)" % self.coefficients


def _polar_quadrature(f, s, t, radial_nodes, angular_nodes):
    # Gauss-Legendre in r (with the Jacobian r), trapezoid in theta
    nodes, weights = leggauss(radial_nodes)
    radii = (t - s) / 2 * nodes + (t + s) / 2
    radial_weights = (t - s) / 2 * weights * radii
    angles = 2 * pi * np.arange(angular_nodes) / angular_nodes
    samples = radii[:, None] * np.exp(1j * angles)[None, :]
    ring_means = np.mean(np.abs(f(samples)), axis=1)
    return float(2 * pi * np.sum(radial_weights * ring_means))


def annulus_l1_norm(f, s, t, radial_nodes=RADIAL_NODES,
                    angular_nodes=ANGULAR_NODES, rtol=QUADRATURE_RTOL):
    """Numerical ``int_{s < |z| < t} |f| dA``

    The integral is computed at two resolutions; the finer value is
    returned.

    Raises:
        QuadratureError: when the two resolutions differ by more than
            *rtol* relatively
    """
    if s <= 0 or t < s:
        raise DomainError("Need 0 < s <= t, got s=%r, t=%r" % (s, t))
    if t == s:
        return 0.0
    coarse = _polar_quadrature(f, s, t, radial_nodes, angular_nodes)
    fine = _polar_quadrature(f, s, t, 2 * radial_nodes, 2 * angular_nodes)
    if abs(fine - coarse) > rtol * abs(fine):
        raise QuadratureError(coarse, fine, rtol)
    return fine


def _series_norm(series, s, t):
    if series.is_monomial:
        (n, c), = iteritems(series.coefficients)
        return abs(c) * laurent_l1_norm(n, s, t)
    if not series.coefficients:
        return 0.0
    return annulus_l1_norm(series, s, t)


class PuddingCheck(object):
    header = ["test_id", "lhs", "rhs", "constant", "ratio", "holds"]

    def __init__(self, lhs, rhs, constant):
        self.lhs = lhs
        self.rhs = rhs
        self.constant = constant

    @property
    def ratio(self):
        if self.rhs == 0:
            return 0.0
        return self.lhs / self.rhs

    @property
    def holds(self):
        return self.lhs <= self.constant * self.rhs

    def row(self, test_id):
        return [test_id, self.lhs, self.rhs, self.constant, self.ratio,
                self.holds]

    def to_dict(self):
        return {"lhs": self.lhs, "rhs": self.rhs, "constant": self.constant,
                "ratio": self.ratio, "holds": self.holds}

    def __repr__(self):
        return "PuddingCheck(lhs=%r, rhs=%r, constant=%r)" % (
            self.lhs, self.rhs, self.constant)


def verify_pudding(pair, series):
    """Compares the L1 norm of *series* on ``r1 < |z| < r2`` with
    ``C_a`` times its norm on ``1 < |z| < r1`` and ``r2 < |z| < R``

    Monomials use the exact norms, other series the polar quadrature.

    Args:
        pair (:class:`AnnulusPair`)
        series (:class:`LaurentSeries` or dict): the Laurent coefficients

    Returns:
        :class:`PuddingCheck`
    """
    if isinstance(series, dict):
        series = LaurentSeries(series)
    lhs = _series_norm(series, pair.r1, pair.r2)
    rhs = _series_norm(series, 1.0, pair.r1) \
          + _series_norm(series, pair.r2, pair.R)
    check = PuddingCheck(lhs, rhs, pudding_constant(pair))
    logger.debug("%r: %r", series, check)
    return check


class AggregateCheck(object):
    """L1 mass of k model collars against ``C_q`` times their mass on the
    flanking annuli"""

    def __init__(self, total_mass, flank_mass, cq, collars):
        self.total_mass = total_mass
        self.flank_mass = flank_mass
        self.cq = cq
        self.collars = collars

    @property
    def holds(self):
        return self.total_mass <= self.cq * self.flank_mass

    def to_dict(self):
        return {"total_mass": self.total_mass, "flank_mass": self.flank_mass,
                "cq": self.cq, "collars": self.collars, "holds": self.holds}


def collar_aggregate_bound(pair, series_list):
    """Sums the collar-wise inequality over identical model collars, one
    series per collar; the constant ``C_q`` does not depend on the number
    of collars"""
    if not series_list:
        raise InvalidInputError("At least one collar is needed")
    checks = [verify_pudding(pair, s) for s in series_list]
    flank = sum(c.rhs for c in checks)
    total = flank + sum(c.lhs for c in checks)
    return AggregateCheck(total, flank, aggregate_cq(pair), len(checks))
