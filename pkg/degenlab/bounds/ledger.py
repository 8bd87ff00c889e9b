from __future__ import division, unicode_literals

import logging
from math import e, log

import numpy as np

from degenlab.common.log_utils import DifferedLoggingMessage, format_table
from degenlab.constants import RADIUS_RATIO
from degenlab.exceptions import DomainError

logger = logging.getLogger(__name__)

# integral of 1 / (2 + 2t) over [0, 1]
HALF_LOG_TWO = log(2.0) / 2.0


def mcmullen_step(L, C=1.0):
    """Bound ``C (L log(1/L))^2 log(2)/2`` on the Bers-norm step produced by
    one stretch stage acting where the injectivity radius is at most *L*

    The value at ``L = 0`` is the limit 0.

    Example:

        >>> round(mcmullen_step(0.5), 5)
        0.04163
    """
    if L < 0 or L >= 1:
        raise DomainError("Radius bound must lie in [0, 1), got %r" % L)
    if L == 0:
        return 0.0
    return C * (L * log(1.0 / L)) ** 2 * HALF_LOG_TWO


def radius_sequence(L0=0.5, ratio=RADIUS_RATIO, J=10):
    """Injectivity-radius bounds ``L'_j = L0 ratio^j`` for ``j = 0..J``"""
    if not 0 < L0 <= 0.5:
        raise DomainError("Initial radius bound must lie in (0, 1/2], got %r"
                          % L0)
    if not 0 <= ratio < 1:
        raise DomainError("Radius ratio must lie in [0, 1), got %r" % ratio)
    return L0 * ratio ** np.arange(J + 1, dtype=float)


def base_series_closed_form(r):
    """``sum_{j>=1} j^2 r^j = r (1 + r) / (1 - r)^3``

    Example:

        >>> round(base_series_closed_form(8.0 / 9.0), 9)
        1224.0
    """
    return r * (1 + r) / (1 - r) ** 3


def base_series_partial_sums(r, J):
    j = np.arange(1, J + 1, dtype=float)
    return np.cumsum(j ** 2 * r ** j)


def turnover_index(radii):
    """First index where the radius bound drops to 1/e or below, from which
    on ``x log(1/x)`` decreases along the sequence"""
    below = np.nonzero(np.asarray(radii) <= 1.0 / e)[0]
    return int(below[0]) if len(below) else None


class ConvergenceLedger(object):
    """Per-stage step bounds of the stretch construction and their partial
    sums, in units of the constant C

    Attributes:
        radii: ``L'_j`` for ``j = 0..J``
        step_bounds: :func:`mcmullen_step` of each radius
        partial_sums: cumulative sums of the steps
        cap: exact value of the infinite sum
        literal_cap: ``C log(2)/2 (log 1/ratio)^2 sum j^2 ratio^(2j)``, the
            cap obtained by dropping the ``log(1/L0)`` part of each term;
            reported, not asserted
    """

    def __init__(self, C=1.0, L0=0.5, ratio=RADIUS_RATIO, J=500):
        self.C = C
        self.L0 = L0
        self.ratio = ratio
        self.J = J
        self.radii = radius_sequence(L0, ratio, J)
        self.step_bounds = np.array([mcmullen_step(L, C)
                                     for L in self.radii])
        self.partial_sums = np.cumsum(self.step_bounds)
        self.cap = series_cap(C, L0, ratio)
        self.literal_cap = literal_series_cap(C, ratio)
        self.turnover = turnover_index(self.radii)
        logger.debug("Ledger head:\n%s", DifferedLoggingMessage(
            format_table, self.header, self.rows()[:8]))

    @property
    def partial_sum(self):
        return float(self.partial_sums[-1])

    @property
    def header(self):
        return ["j", "radius", "step_bound", "partial_sum"]

    def rows(self):
        return [[j, float(L), float(s), float(ps)] for j, (L, s, ps) in
                enumerate(zip(self.radii, self.step_bounds,
                              self.partial_sums))]

    def to_dict(self):
        return {
            "C": self.C,
            "L0": self.L0,
            "ratio": self.ratio,
            "J": self.J,
            "partial_sum": self.partial_sum,
            "cap": self.cap,
            "literal_cap": self.literal_cap,
            "turnover_index": self.turnover
        }


def series_cap(C, L0, ratio):
    """Exact value of ``sum_{j>=0} mcmullen_step(L0 ratio^j, C)``

    Each term is ``C log(2)/2 L0^2 r^j (A + j B)^2`` with ``r = ratio^2``,
    ``A = log(1/L0)`` and ``B = log(1/ratio)``; the three resulting power
    series are summed in closed form.
    """
    if ratio == 0:
        return mcmullen_step(L0, C)
    r = ratio ** 2
    A = log(1.0 / L0)
    B = log(1.0 / ratio)
    s0 = 1.0 / (1 - r)
    s1 = r / (1 - r) ** 2
    s2 = base_series_closed_form(r)
    return C * HALF_LOG_TWO * L0 ** 2 * (A ** 2 * s0 + 2 * A * B * s1
                                         + B ** 2 * s2)


def literal_series_cap(C, ratio):
    if ratio == 0:
        return 0.0
    r = ratio ** 2
    return C * HALF_LOG_TWO * log(1.0 / ratio) ** 2 \
           * base_series_closed_form(r)


def series_sum(C=1.0, L0=0.5, ratio=RADIUS_RATIO, J=500):
    """Partial sum up to J of the step bounds with its closed-form cap

    Returns:
        :class:`ConvergenceLedger`
    """
    return ConvergenceLedger(C, L0, ratio, J)
