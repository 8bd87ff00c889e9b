from __future__ import division, unicode_literals

import logging
from math import ceil

from degenlab.constants import DEFAULT_BAND_FRACTION, STAGE_GROWTH
from degenlab.exceptions import ContractViolation, DomainError, \
    InvalidInputError
from degenlab.stretch.piecewise_map import (
    PiecewiseVerticalMap, compose, stretch_map)

logger = logging.getLogger(__name__)


class ScheduleTime(object):
    """Position ``(stage, local_t)`` in the iterated stretch schedule

    Stage ``k >= 1`` runs the stretch of the cylinder of half-height
    ``(3/2)^(k-1) H`` from local time 0 to 1. The global time is
    ``k - 1 + local_t``; integer global times ``k >= 1`` are represented as
    the end ``(k, 1)`` of stage k.
    """

    def __init__(self, stage, local_t):
        if stage < 1:
            raise InvalidInputError("Stages start at 1, got %r" % stage)
        if not 0 <= local_t <= 1:
            raise DomainError("Local time must lie in [0, 1], got %r"
                              % local_t)
        self.stage = int(stage)
        self.local_t = float(local_t)

    @classmethod
    def from_global(cls, t, j):
        """Splits a global time ``t`` in ``[0, j]``"""
        if not 0 <= t <= j:
            raise DomainError("Global time must lie in [0, %r], got %r"
                              % (j, t))
        stage = max(1, int(ceil(t)))
        return cls(stage, t - (stage - 1))

    @property
    def global_t(self):
        return self.stage - 1 + self.local_t

    def __eq__(self, other):
        return isinstance(other, ScheduleTime) \
               and (self.stage, self.local_t) == (other.stage, other.local_t)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __repr__(self):
        return "ScheduleTime(stage=%r, local_t=%r)" % (self.stage,
                                                       self.local_t)


def stage_halfheight(H, stage):
    """Half-height of the cylinder stretched during *stage*"""
    return STAGE_GROWTH ** (stage - 1) * H


def iterate_schedule(H, j, t, a=DEFAULT_BAND_FRACTION):
    """The schedule map at global time *t*: the full stretches of stages
    ``1..k-1`` followed by the stretch of stage ``k`` at its local time

    At integer time ``t = j`` this is the j-fold composition
    ``psi_{(3/2)^(j-1) H} o ... o psi_{3H/2} o psi_H``.

    Raises:
        ContractViolation: when *a* differs from 1/2, since only then does
            stage k end on the cylinder stretched by stage k + 1
        DomainError: when *t* lies outside ``[0, j]``
    """
    if a != DEFAULT_BAND_FRACTION:
        raise ContractViolation("The iterated schedule requires a = 1/2, "
                                "got a=%r" % a)
    if j < 1:
        raise InvalidInputError("Stage count must be at least 1, got %r" % j)
    position = ScheduleTime.from_global(t, j)
    current = PiecewiseVerticalMap.identity(H)
    for stage in range(1, position.stage):
        current = compose(stretch_map(stage_halfheight(H, stage), a, 1.0),
                          current)
    last = stretch_map(stage_halfheight(H, position.stage), a,
                       position.local_t)
    result = compose(last, current)
    logger.debug("Schedule map at t=%r (%r): %d pieces", t, position,
                 result.num_pieces)
    return result


def standard_deformation(H, j):
    """The j-fold stretch ``psi^(j)``; the identity for ``j = 0``"""
    if j == 0:
        return PiecewiseVerticalMap.identity(H)
    return iterate_schedule(H, j, j)
