from __future__ import division, unicode_literals

import logging
from math import log, pi

import numpy as np

from degenlab.common.log_utils import DifferedLoggingMessage, format_table
from degenlab.david.sequences import Sequence
from degenlab.exceptions import ContractViolation, InvalidInputError
from degenlab.stretch.beltrami import Region, RegionBeltrami

logger = logging.getLogger(__name__)

# no index search goes beyond this bound
MAX_INDEX = 2 ** 60


def stage_dilatation(j):
    """Maximal dilatation ``K_j = 2^j`` of the j-fold stretch"""
    return 2.0 ** j


def log_stage_dilatation(j):
    return j * log(2.0)


def stage_modulus(j):
    """``(2^j - 1) / (2^j + 1)``, the deepest coefficient of the j-fold
    stretch, evaluated as ``tanh(j log(2) / 2)``

    Example:

        >>> [round(stage_modulus(j), 12) for j in range(3)]
        [0.0, 0.333333333333, 0.6]
    """
    return float(np.tanh(j * log(2.0) / 2.0))


class DavidBudget(object):
    """Budget sequence *p*, area sequence *area* and the selected indices
    ``M(j)``, one per stage

    Stage j places the j-fold stretch on the region of index ``M(j)``, whose
    area is small enough that ``area(M(j)) * exp(2 K_j) < p(j)``.
    """

    def __init__(self, p, area, selection):
        self.p = p
        self.area = area
        self.selection = [int(m) for m in selection]
        if any(b <= a for a, b in zip(self.selection, self.selection[1:])):
            raise ContractViolation("Selected indices must be strictly "
                                    "increasing")

    @property
    def num_stages(self):
        return len(self.selection)

    def log_margin(self, j):
        """``log p(j) - log(area(M(j)) exp(2 K_j))``, positive on a valid
        budget"""
        m = self.selection[j]
        return self.p.log_value(j) - self.area.log_value(m) \
               - 2 * stage_dilatation(j)

    def stage_mass(self, j):
        """``area(M(j)) * exp(2 K_j)``"""
        m = self.selection[j]
        return float(np.exp(self.area.log_value(m) + 2 * stage_dilatation(j)))

    def is_valid(self):
        return all(self.log_margin(j) > 0 for j in range(self.num_stages))

    def to_dict(self):
        return {
            "p": self.p.to_dict(),
            "area": self.area.to_dict(),
            "selection": list(self.selection)
        }

    @classmethod
    def from_dict(cls, obj_dict):
        return cls(Sequence.from_dict(obj_dict["p"]),
                   Sequence.from_dict(obj_dict["area"]),
                   obj_dict["selection"])

    def _table(self):
        rows = [[j, m, self.p(j), self.stage_mass(j)]
                for j, m in enumerate(self.selection)]
        return format_table(["j", "M(j)", "p_j", "area*exp(2K)"], rows)


def select_budget(p, area, J):
    """Selects, for each stage ``j < J``, the smallest index ``M(j)`` above
    ``M(j-1)`` with ``area(M(j)) * exp(2^(j+1)) < p(j)``

    The comparison is made on logarithms, so stages whose ``exp(2^(j+1))``
    overflows are handled. The search gallops then bisects, relying on the
    area sequence being strictly decreasing.

    Raises:
        ContractViolation: when *p* is not summable, when *area* does not
            decrease to 0, or when the areas sum to pi or more (they must
            fit in the unit disk)
    """
    if J < 0:
        raise InvalidInputError("Stage count must be non-negative")
    if not p.is_summable:
        raise ContractViolation("Budget sequence %r is not summable"
                                % p.to_dict())
    if not (area.vanishes and area.strictly_decreasing):
        raise ContractViolation("Area sequence %r does not decrease to 0"
                                % area.to_dict())
    if not area.total() < pi:
        raise ContractViolation("Areas sum to %r which does not fit in the "
                                "unit disk" % area.total())

    selection = []
    for j in range(J):
        threshold = p.log_value(j) - 2 * stage_dilatation(j)
        start = selection[-1] + 1 if selection else 0
        selection.append(_first_index_below(area, threshold, start))
    budget = DavidBudget(p, area, selection)
    logger.debug("Selected budget:\n%s",
                 DifferedLoggingMessage(budget._table))  # pylint: disable=W0212
    return budget


def _first_index_below(sequence, log_threshold, start):
    """Smallest ``m >= start`` with ``log sequence(m) < log_threshold``"""
    if sequence.log_value(start) < log_threshold:
        return start
    low, step = start, 1
    while sequence.log_value(low + step) >= log_threshold:
        low += step
        step *= 2
        if low > MAX_INDEX:
            raise ContractViolation("No admissible index below %d"
                                    % MAX_INDEX)
    high = low + step
    # invariant: value(low) >= threshold > value(high)
    while high - low > 1:
        mid = (low + high) // 2
        if sequence.log_value(mid) < log_threshold:
            high = mid
        else:
            low = mid
    return high


def assemble_mu(budget, J=None):
    """Region coefficient of the David construction through stage *J*
    inclusive: each stage ``j <= J`` contributes the region ``M(j)`` with
    constant value ``-(2^j - 1)/(2^j + 1)``; the rest of the unit disk is
    background

    *J* defaults to the last selected stage, so a budget selected with
    ``select_budget(p, area, J + 1)`` covers stages ``0..J``.

    Raises:
        InvalidInputError: when the budget has no stage *J*
    """
    if J is None:
        J = budget.num_stages - 1
    if not 0 <= J < budget.num_stages:
        raise InvalidInputError("Budget has stages 0..%d, stage %d requested"
                                % (budget.num_stages - 1, J))
    regions = []
    for j in range(J + 1):
        m = budget.selection[j]
        regions.append(Region(
            label=m,
            log_area=budget.area.log_value(m),
            value=-stage_modulus(j),
            dilatation=stage_dilatation(j)))
    used_area = sum(r.area for r in regions)
    return RegionBeltrami(regions, background_area=pi - used_area)


def l1_tail(budget, j):
    """``sum_{n >= j} p_n``, the bound on the L1 distance between the stage
    j distortion and the limit distortion"""
    return budget.p.tail_sum(j)
