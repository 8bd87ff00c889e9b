from __future__ import division, unicode_literals

import logging

import numpy as np

from degenlab.common.utils import as_scalar_or_array
from degenlab.constants import (
    BREAKPOINTS, OFFSETS, SLOPES, SOURCE_HALFHEIGHT, TARGET_HALFHEIGHT)
from degenlab.exceptions import ContractViolation, DomainError, \
    InvalidInputError

logger = logging.getLogger(__name__)

# relative tolerance used for breakpoint merging and continuity checks
REL_TOL = 1e-12


class PiecewiseVerticalMap(object):
    """Continuous piecewise-affine map ``y -> slope * y + offset`` acting on
    the vertical coordinate of a cylinder

    The interval ``[-source_halfheight, source_halfheight]`` is cut by
    ``len(breakpoints)`` sorted breakpoints into pieces, piece ``i`` carrying
    ``slopes[i]`` and ``offsets[i]``. Adjacent pieces with identical slopes
    are merged, so two maps describing the same function have identical
    representations.

    Args:
        breakpoints (list of float): sorted interior breakpoints
        slopes (list of float): positive slope of each piece
        offsets (list of float): offset of each piece
        source_halfheight (float): half-height of the domain
        target_halfheight (float): half-height of the image

    Raises:
        InvalidInputError: when the pieces are inconsistent, discontinuous or
            do not map the domain onto the target interval
    """

    def __init__(self, breakpoints, slopes, offsets, source_halfheight,
                 target_halfheight):
        breakpoints = np.asarray(breakpoints, dtype=float).reshape(-1)
        slopes = np.asarray(slopes, dtype=float).reshape(-1)
        offsets = np.asarray(offsets, dtype=float).reshape(-1)
        if not source_halfheight > 0 or not target_halfheight > 0:
            raise InvalidInputError("Half-heights must be positive")
        if len(slopes) != len(breakpoints) + 1 \
                or len(offsets) != len(slopes):
            raise InvalidInputError(
                "Expected %d slopes and offsets for %d breakpoints, got %d "
                "and %d" % (len(breakpoints) + 1, len(breakpoints),
                            len(slopes), len(offsets)))
        if np.any(slopes <= 0):
            raise InvalidInputError("Slopes must be positive")
        if np.any(np.diff(breakpoints) <= 0):
            raise InvalidInputError("Breakpoints must be strictly increasing")
        if len(breakpoints) and (breakpoints[0] <= -source_halfheight
                                 or breakpoints[-1] >= source_halfheight):
            raise InvalidInputError("Breakpoints must lie strictly inside "
                                    "the domain")
        self.source_halfheight = float(source_halfheight)
        self.target_halfheight = float(target_halfheight)
        self.breakpoints, self.slopes, self.offsets = _merge_pieces(
            breakpoints, slopes, offsets)
        self._check_continuity()

    @classmethod
    def identity(cls, halfheight):
        return cls([], [1.0], [0.0], halfheight, halfheight)

    @classmethod
    def linear(cls, halfheight, slope):
        """The map ``y -> slope * y`` on ``[-halfheight, halfheight]``"""
        return cls([], [slope], [0.0], halfheight, slope * halfheight)

    def _check_continuity(self):
        scale = max(self.source_halfheight, self.target_halfheight)
        tol = 1e3 * REL_TOL * scale
        for i, b in enumerate(self.breakpoints):
            left = self.slopes[i] * b + self.offsets[i]
            right = self.slopes[i + 1] * b + self.offsets[i + 1]
            if abs(left - right) > tol:
                raise InvalidInputError(
                    "Map is discontinuous at y=%r: %r != %r"
                    % (b, left, right))
        bottom = -self.slopes[0] * self.source_halfheight + self.offsets[0]
        top = self.slopes[-1] * self.source_halfheight + self.offsets[-1]
        if abs(bottom + self.target_halfheight) > tol \
                or abs(top - self.target_halfheight) > tol:
            raise InvalidInputError(
                "Map sends [%r, %r] to [%r, %r] instead of [%r, %r]"
                % (-self.source_halfheight, self.source_halfheight, bottom,
                   top, -self.target_halfheight, self.target_halfheight))

    @property
    def num_pieces(self):
        return len(self.slopes)

    def piece_index(self, y):
        y_arr = np.asarray(y, dtype=float)
        tol = REL_TOL * self.source_halfheight
        if np.any(np.abs(y_arr) > self.source_halfheight + tol):
            raise DomainError("Heights must lie in [-%r, %r]"
                              % (self.source_halfheight,
                                 self.source_halfheight))
        return np.searchsorted(self.breakpoints, y_arr, side="right")

    def __call__(self, y):
        idx = self.piece_index(y)
        values = self.slopes[idx] * np.asarray(y, dtype=float) \
                 + self.offsets[idx]
        return as_scalar_or_array(values, y)

    def slope_at(self, y):
        return as_scalar_or_array(self.slopes[self.piece_index(y)], y)

    def pieces(self):
        """Yields ``(lower, upper, slope, offset)`` for each affine piece"""
        edges = np.concatenate(([-self.source_halfheight], self.breakpoints,
                                [self.source_halfheight]))
        for i in range(self.num_pieces):
            yield (float(edges[i]), float(edges[i + 1]),
                   float(self.slopes[i]), float(self.offsets[i]))

    def inverse(self):
        image_breakpoints = self.slopes[:-1] * self.breakpoints \
                            + self.offsets[:-1]
        return PiecewiseVerticalMap(
            breakpoints=image_breakpoints,
            slopes=1.0 / self.slopes,
            offsets=-self.offsets / self.slopes,
            source_halfheight=self.target_halfheight,
            target_halfheight=self.source_halfheight)

    def is_odd(self, tol=REL_TOL):
        probes = np.concatenate((self.breakpoints, [self.source_halfheight]))
        probes = np.concatenate((probes, 0.5 * (probes[1:] + probes[:-1])))
        scale = tol * self.target_halfheight
        return bool(np.all(np.abs(self(probes) + self(-probes)) <= scale))

    def allclose(self, other, tol=1e-10):
        """Compares two maps piece by piece, with an absolute tolerance
        scaled by the half-heights"""
        if not isinstance(other, PiecewiseVerticalMap):
            return False
        if self.num_pieces != other.num_pieces:
            return False
        scale = tol * max(1.0, self.source_halfheight,
                          self.target_halfheight)
        return bool(
            abs(self.source_halfheight - other.source_halfheight) <= scale
            and abs(self.target_halfheight - other.target_halfheight) <= scale
            and np.allclose(self.breakpoints, other.breakpoints, rtol=0,
                            atol=scale)
            and np.allclose(self.slopes, other.slopes, rtol=tol, atol=0)
            and np.allclose(self.offsets, other.offsets, rtol=0, atol=scale))

    def to_dict(self):
        return {
            BREAKPOINTS: self.breakpoints.tolist(),
            SLOPES: self.slopes.tolist(),
            OFFSETS: self.offsets.tolist(),
            SOURCE_HALFHEIGHT: self.source_halfheight,
            TARGET_HALFHEIGHT: self.target_halfheight
        }

    @classmethod
    def from_dict(cls, obj_dict):
        return cls(obj_dict[BREAKPOINTS], obj_dict[SLOPES],
                   obj_dict[OFFSETS], obj_dict[SOURCE_HALFHEIGHT],
                   obj_dict[TARGET_HALFHEIGHT])

    def __repr__(self):
        return "PiecewiseVerticalMap(breakpoints=%r, slopes=%r, " \
               "offsets=%r, source_halfheight=%r, target_halfheight=%r)" % (
                   self.breakpoints.tolist(), self.slopes.tolist(),
                   self.offsets.tolist(), self.source_halfheight,
                   self.target_halfheight)


def _merge_pieces(breakpoints, slopes, offsets):
    kept_breakpoints = []
    kept_slopes = [slopes[0]]
    kept_offsets = [offsets[0]]
    for b, s, o in zip(breakpoints, slopes[1:], offsets[1:]):
        if abs(s - kept_slopes[-1]) <= REL_TOL * max(s, kept_slopes[-1]):
            continue
        kept_breakpoints.append(b)
        kept_slopes.append(s)
        kept_offsets.append(o)
    return (np.array(kept_breakpoints, dtype=float),
            np.array(kept_slopes, dtype=float),
            np.array(kept_offsets, dtype=float))


def _dedupe_breakpoints(values, halfheight):
    values = np.sort(np.asarray(values, dtype=float))
    tol = 1e2 * REL_TOL * halfheight
    values = values[np.abs(values) < halfheight - tol]
    kept = []
    for v in values:
        if not kept or v - kept[-1] > tol:
            kept.append(v)
    return np.array(kept, dtype=float)


def compose(outer, inner):
    """Exact composition ``outer o inner`` of two piecewise vertical maps

    The breakpoints of the result are the breakpoints of *inner* together
    with the preimages under *inner* of the breakpoints of *outer*. Slopes
    multiply and offsets follow ``s_out * off_in + off_out``.

    Raises:
        ContractViolation: when the target half-height of *inner* differs
            from the source half-height of *outer*
    """
    scale = max(inner.target_halfheight, outer.source_halfheight)
    if abs(inner.target_halfheight - outer.source_halfheight) \
            > 1e3 * REL_TOL * scale:
        raise ContractViolation(
            "Cannot compose: inner map targets half-height %r but outer map "
            "is defined on half-height %r"
            % (inner.target_halfheight, outer.source_halfheight))
    pulled_back = inner.inverse()(np.clip(
        outer.breakpoints, -inner.target_halfheight,
        inner.target_halfheight))
    breakpoints = _dedupe_breakpoints(
        np.concatenate((inner.breakpoints, np.atleast_1d(pulled_back))),
        inner.source_halfheight)

    edges = np.concatenate(([-inner.source_halfheight], breakpoints,
                            [inner.source_halfheight]))
    midpoints = 0.5 * (edges[1:] + edges[:-1])
    inner_idx = inner.piece_index(midpoints)
    outer_idx = outer.piece_index(np.clip(
        inner(midpoints), -outer.source_halfheight, outer.source_halfheight))
    slopes = outer.slopes[outer_idx] * inner.slopes[inner_idx]
    offsets = outer.slopes[outer_idx] * inner.offsets[inner_idx] \
              + outer.offsets[outer_idx]
    return PiecewiseVerticalMap(breakpoints, slopes, offsets,
                                inner.source_halfheight,
                                outer.target_halfheight)


def stretch_map(H, a, t):
    """The stretch deformation at time *t*: the band ``|y| <= a H`` is scaled
    by ``1 + t`` and the outer bands are translated by ``+-a t H``

    Example:

        >>> m = stretch_map(1.0, 0.5, 1.0)
        >>> float(m(0.25)), float(m(0.75)), m.target_halfheight
        (0.5, 1.25, 1.5)
    """
    if not H > 0:
        raise DomainError("Half-height must be positive, got %r" % H)
    if not 0 < a < 1:
        raise DomainError("Band fraction must lie in (0, 1), got %r" % a)
    if not 0 <= t <= 1:
        raise DomainError("Stretch time must lie in [0, 1], got %r" % t)
    return PiecewiseVerticalMap(
        breakpoints=[-a * H, a * H],
        slopes=[1.0, 1.0 + t, 1.0],
        offsets=[-a * t * H, 0.0, a * t * H],
        source_halfheight=H,
        target_halfheight=(1 + a * t) * H)


def max_dilatation(vertical_map):
    """Maximal dilatation ``max(s, 1/s)`` over the pieces of the map"""
    slopes = vertical_map.slopes
    return float(np.max(np.maximum(slopes, 1.0 / slopes)))
