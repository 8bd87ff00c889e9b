from __future__ import division, unicode_literals

import logging
from math import exp, isinf, log

import numpy as np
from scipy.special import logsumexp

from degenlab.common.log_utils import log_result
from degenlab.exceptions import CertificationError, InvalidInputError
from degenlab.stretch.beltrami import RegionBeltrami

logger = logging.getLogger(__name__)

# decay rate obtained through the Chebyshev inequality
CHEBYSHEV_ALPHA = 2.0
MAX_LOG_FLOAT = float(np.log(np.finfo(float).max))


def log_exp_integrability(spec, p, include_background=True):
    """Logarithm of ``sum_regions area * exp(p K) + background * exp(p)``"""
    if not isinstance(spec, RegionBeltrami):
        raise InvalidInputError("Exponential integrability is computed on "
                                "region coefficients, got %s" % spec.kind)
    if not p > 0:
        raise InvalidInputError("Exponent must be positive, got %r" % p)
    terms = [r.log_area + p * r.dilatation for r in spec.regions]
    if include_background and spec.background_area:
        terms.append(log(spec.background_area) + p)
    if not terms:
        return float("-inf")
    return float(logsumexp(terms))


def exp_integrability(spec, p, include_background=True):
    """Integral of ``exp(p K)`` over the support of a region coefficient,
    ``K = (1 + |mu|) / (1 - |mu|)``

    Example:

        >>> from degenlab.stretch.beltrami import Region
        >>> spec = RegionBeltrami([Region.with_area("T", 0.1, 1.0 / 3)])
        >>> round(exp_integrability(spec, 2.0), 6)
        5.459815
    """
    return float(np.exp(log_exp_integrability(spec, p, include_background)))


class DavidCertificate(object):
    """Certified bound ``|{|mu| > 1 - eps}| <= C exp(-alpha / eps)`` for
    ``eps >= eps0``, with the measured superlevel areas it was checked
    against"""

    def __init__(self, alpha, C, eps0, exponent, exp_integral, points,
                 fitted_alpha=None):
        self.alpha = alpha
        self.C = C
        self.eps0 = eps0
        self.exponent = exponent
        self.exp_integral = exp_integral
        self.points = points
        self.fitted_alpha = fitted_alpha

    def bound(self, eps):
        return self.C * exp(-self.alpha / eps)

    @property
    def header(self):
        return ["eps", "measured_area", "bound"]

    def rows(self):
        return [[p["eps"], p["measured_area"], p["bound"]]
                for p in self.points]

    def to_dict(self):
        return {
            "alpha": self.alpha,
            "C": self.C,
            "eps0": self.eps0,
            "exponent": self.exponent,
            "exp_integral": self.exp_integral,
            "fitted_alpha": self.fitted_alpha,
            "points": self.points
        }


@log_result(logger, logging.DEBUG, "David certificate ->:\n{result}")
def certify(spec, eps_grid, p=2.0):
    """Issues a David certificate for a region coefficient

    Where ``|mu| > 1 - eps`` the dilatation exceeds ``2/eps - 1``, so by
    Chebyshev ``|{|mu| > 1 - eps}| <= exp(-2p/eps) * I`` with
    ``I = int exp(p (K + 1))``. For ``p >= 1`` this gives the certificate
    ``alpha = 2, C = I``. The superlevel areas of the regions are then
    compared to the bound on every eps of *eps_grid*.

    Returns:
        :class:`DavidCertificate`: also carries the largest decay rate
        compatible with the measured areas for the same C

    Raises:
        CertificationError: when the integral is infinite or a measured
            area exceeds the bound
    """
    if not p >= 1:
        raise InvalidInputError("The Chebyshev certificate requires p >= 1, "
                                "got %r" % p)
    eps_grid = sorted(float(e) for e in eps_grid)
    if not eps_grid or eps_grid[0] <= 0 or eps_grid[-1] > 1:
        raise InvalidInputError("eps values must lie in (0, 1]")
    log_integral = p + log_exp_integrability(spec, p)
    if isinf(log_integral) or np.isnan(log_integral):
        raise CertificationError(
            "Integral of exp(p(K+1)) is not finite",
            diagnostic={"exponent": p, "log_integral": log_integral})
    if log_integral >= MAX_LOG_FLOAT:
        raise CertificationError(
            "Integral of exp(p(K+1)) overflows",
            diagnostic={"exponent": p, "log_integral": log_integral})
    C = exp(log_integral)

    points = []
    fitted_alpha = float("inf")
    for eps in eps_grid:
        measured = spec.superlevel_area(eps)
        bound = C * exp(-CHEBYSHEV_ALPHA / eps)
        points.append({"eps": eps, "measured_area": measured,
                       "bound": bound, "holds": measured <= bound})
        if measured > 0:
            fitted_alpha = min(fitted_alpha, eps * log(C / measured))
    failures = [pt for pt in points if not pt["holds"]]
    if failures:
        raise CertificationError(
            "Measured superlevel areas exceed the Chebyshev bound",
            diagnostic={"failures": failures})
    return DavidCertificate(
        alpha=CHEBYSHEV_ALPHA, C=C, eps0=eps_grid[0], exponent=p,
        exp_integral=exp(log_exp_integrability(spec, p)), points=points,
        fitted_alpha=None if isinf(fitted_alpha) else fitted_alpha)
