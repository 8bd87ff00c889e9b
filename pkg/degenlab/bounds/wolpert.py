from __future__ import division, unicode_literals

import logging
from math import pi

from degenlab.constants import GEODESIC_DECAY_RATIO
from degenlab.exceptions import DomainError, InvalidInputError

logger = logging.getLogger(__name__)

# stage search never goes beyond this index
MAX_STAGE = 100000


def geodesic_decay(n, H):
    """Upper bound ``(2/3)^(n-1) pi^2 / H`` for the shortest geodesic of the
    cylinder after n stretches"""
    if n < 1:
        raise InvalidInputError("Stages start at 1, got %r" % n)
    if not H > 0:
        raise DomainError("Half-height must be positive, got %r" % H)
    return GEODESIC_DECAY_RATIO ** (n - 1) * pi ** 2 / H


def wolpert_interval(length, K):
    """Range ``[l/K, l K]`` reachable by a geodesic of length *l* under a
    K-quasiconformal map"""
    if not K >= 1:
        raise DomainError("Dilatation must be >= 1, got %r" % K)
    return length / K, length * K


def wolpert_contradiction(short, K, H):
    """Least stage n with ``geodesic_decay(n, H) < short / K``

    A surface whose geodesics are all longer than *short* cannot be mapped
    K-quasiconformally onto the stage n surface, so the limit of the
    construction is not in the Teichmuller space.

    Example:

        >>> wolpert_contradiction(0.5, 10.0, 30.0)
        6
    """
    if not short > 0:
        raise DomainError("Length lower bound must be positive, got %r"
                          % short)
    lower, _ = wolpert_interval(short, K)
    n = 1
    while not geodesic_decay(n, H) < lower:
        n += 1
        if n > MAX_STAGE:
            raise DomainError("No stage below %r within %d stages"
                              % (lower, MAX_STAGE))
    logger.debug("Wolpert contradiction for short=%r, K=%r, H=%r at n=%d",
                 short, K, H, n)
    return n
