from __future__ import division, unicode_literals

import logging
from abc import ABCMeta, abstractmethod
from cmath import exp as cexp
from math import exp, log

import numpy as np
from future.utils import with_metaclass

from degenlab.common.registrable import Registrable
from degenlab.common.utils import (
    as_scalar_or_array, complex_from_jsonable, to_jsonable)
from degenlab.constants import (
    BACKGROUND_AREA, BANDS, DILATATION, HALFHEIGHT, KIND, LABEL, LOG_AREA,
    LOWER, REGIONS, UPPER, VALUE)
from degenlab.exceptions import (
    ContractViolation, DomainError, InvalidInputError)
from degenlab.stretch.piecewise_map import compose, stretch_map

logger = logging.getLogger(__name__)


class BeltramiSpec(with_metaclass(ABCMeta, Registrable)):
    """A complex dilatation field with modulus < 1

    Concrete representations (horizontal bands, labelled regions with
    areas, sampled grids) register themselves under a kind name which is
    used for serialization.
    """

    @property
    def kind(self):
        return BeltramiSpec.registered_name(type(self))

    @abstractmethod
    def sup_modulus(self):
        """Supremum of ``|mu|`` over the representation"""

    @abstractmethod
    def rotate(self, factor):
        """Returns a copy with every value multiplied by *factor*"""

    def max_dilatation(self):
        k = self.sup_modulus()
        return (1 + k) / (1 - k)

    @abstractmethod
    def to_dict(self):
        pass

    @classmethod
    def from_dict(cls, obj_dict):
        spec_type = BeltramiSpec.by_name(obj_dict[KIND])
        return spec_type.from_dict(obj_dict)


def _check_modulus(value):
    if not abs(value) < 1:
        raise DomainError("Beltrami coefficients must have modulus < 1, got "
                          "%r" % value)


@BeltramiSpec.register(BANDS)
class BandBeltrami(BeltramiSpec):
    """Coefficient constant on horizontal bands of a cylinder of half-height
    *halfheight*, zero outside the listed bands

    Args:
        bands (list): ``(lower, upper, value)`` triples with disjoint
            intervals
        halfheight (float): half-height of the cylinder carrying the field
    """

    def __init__(self, bands, halfheight):
        bands = sorted((float(lo), float(up), complex(v))
                       for lo, up, v in bands)
        for lo, up, value in bands:
            if not lo < up:
                raise InvalidInputError("Empty band [%r, %r]" % (lo, up))
            _check_modulus(value)
        for (_, up, _), (lo, _, _) in zip(bands, bands[1:]):
            if lo < up:
                raise ContractViolation("Bands overlap at y=%r" % lo)
        self.bands = bands
        self.halfheight = float(halfheight)

    def value_at(self, y):
        y_arr = np.asarray(y, dtype=float)
        values = np.zeros(y_arr.shape, dtype=complex)
        for lo, up, value in self.bands:
            values[(y_arr >= lo) & (y_arr <= up)] = value
        return as_scalar_or_array(values, y)

    def interfaces(self):
        edges = set()
        for lo, up, _ in self.bands:
            edges.update((lo, up))
        return sorted(edges)

    def sup_modulus(self):
        return max([abs(v) for _, _, v in self.bands] + [0.0])

    def rotate(self, factor):
        return BandBeltrami([(lo, up, v * factor)
                             for lo, up, v in self.bands], self.halfheight)

    def scaled(self, scale):
        """Multiplies every value by the real *scale*"""
        return self.rotate(scale)

    def to_dict(self):
        return {
            KIND: self.kind,
            HALFHEIGHT: self.halfheight,
            BANDS: [{LOWER: lo, UPPER: up, VALUE: to_jsonable(v)}
                    for lo, up, v in self.bands]
        }

    @classmethod
    def from_dict(cls, obj_dict):
        bands = [(b[LOWER], b[UPPER], complex_from_jsonable(b[VALUE]))
                 for b in obj_dict[BANDS]]
        return cls(bands, obj_dict[HALFHEIGHT])


class Region(object):
    """Labelled region where the coefficient is constant

    The area is stored through its logarithm so that regions much smaller
    than the smallest double remain representable. When *dilatation* is
    known exactly it is stored too, since recovering it from a modulus close
    to 1 loses precision.
    """

    def __init__(self, label, log_area, value, dilatation=None):
        if dilatation is None:
            _check_modulus(value)
            dilatation = (1 + abs(value)) / (1 - abs(value))
        elif not 1 <= dilatation < float("inf"):
            raise DomainError("Dilatation must be finite and >= 1, got %r"
                              % dilatation)
        self.label = label
        self.log_area = float(log_area)
        self.value = complex(value)
        self.dilatation = float(dilatation)

    @classmethod
    def with_area(cls, label, area, value, dilatation=None):
        if not area > 0:
            raise InvalidInputError("Region areas must be positive, got %r"
                                    % area)
        return cls(label, log(area), value, dilatation)

    @property
    def area(self):
        return exp(self.log_area)

    @property
    def modulus(self):
        return abs(self.value)

    @property
    def modulus_gap(self):
        """``1 - |mu|`` computed from the dilatation, exact for deep
        stages"""
        return 2.0 / (self.dilatation + 1.0)

    def to_dict(self):
        return {
            LABEL: self.label,
            LOG_AREA: self.log_area,
            VALUE: to_jsonable(self.value),
            DILATATION: self.dilatation
        }

    @classmethod
    def from_dict(cls, obj_dict):
        return cls(obj_dict[LABEL], obj_dict[LOG_AREA],
                   complex_from_jsonable(obj_dict[VALUE]),
                   obj_dict.get(DILATATION))


@BeltramiSpec.register(REGIONS)
class RegionBeltrami(BeltramiSpec):
    """Coefficient given region by region, with a zero background of area
    *background_area* (None when the background is not accounted for)"""

    def __init__(self, regions, background_area=None):
        labels = [r.label for r in regions]
        if len(set(labels)) != len(labels):
            raise ContractViolation("Region labels must be distinct")
        if background_area is not None and background_area < 0:
            raise InvalidInputError("Background area must be non-negative")
        self.regions = list(regions)
        self.background_area = background_area

    def sup_modulus(self):
        return max([r.modulus for r in self.regions] + [0.0])

    def max_dilatation(self):
        return max([r.dilatation for r in self.regions] + [1.0])

    def total_area(self):
        area = sum(r.area for r in self.regions)
        if self.background_area is not None:
            area += self.background_area
        return area

    def superlevel_area(self, eps):
        """Area of ``{|mu| > 1 - eps}``"""
        return sum(r.area for r in self.regions if r.modulus_gap < eps)

    def rotate(self, factor):
        return RegionBeltrami(
            [Region(r.label, r.log_area, r.value * factor, r.dilatation)
             for r in self.regions], self.background_area)

    def to_dict(self):
        return {
            KIND: self.kind,
            REGIONS: [r.to_dict() for r in self.regions],
            BACKGROUND_AREA: self.background_area
        }

    @classmethod
    def from_dict(cls, obj_dict):
        return cls([Region.from_dict(r) for r in obj_dict[REGIONS]],
                   obj_dict.get(BACKGROUND_AREA))


def disjoint_union(first, second, background_area=None):
    """Coefficient equal to *first* on its support and *second* on its
    support, which must not intersect

    Raises:
        ContractViolation: when the supports overlap or the representations
            differ
    """
    if isinstance(first, RegionBeltrami) and isinstance(second,
                                                        RegionBeltrami):
        return RegionBeltrami(first.regions + second.regions,
                              background_area)
    if isinstance(first, BandBeltrami) and isinstance(second, BandBeltrami):
        if first.halfheight != second.halfheight:
            raise ContractViolation("Band coefficients live on cylinders of "
                                    "different heights")
        return BandBeltrami(first.bands + second.bands, first.halfheight)
    raise ContractViolation("Cannot form the union of %s and %s coefficients"
                            % (first.kind, second.kind))


def beltrami_of(vertical_map):
    """Beltrami coefficient of ``x + iy -> x + i m(y)``: ``(1 - s)/(1 + s)``
    on each piece of slope ``s``

    Example:

        >>> spec = beltrami_of(stretch_map(1.0, 0.5, 1.0))
        >>> [round(v.real, 6) for _, _, v in spec.bands]
        [0.0, -0.333333, 0.0]
    """
    bands = [(lo, up, (1 - s) / (1 + s))
             for lo, up, s, _ in vertical_map.pieces()]
    return BandBeltrami(bands, vertical_map.source_halfheight)


def infinitesimal_beltrami(t, H=1.0, a=0.5):
    """Derivative in time of the stretch coefficient at time *t*

    It equals ``-1 / (2 + 2t)`` on the stretched band ``|y| <= (1+t) a H``
    of the time *t* cylinder and vanishes elsewhere.
    """
    if not t >= 0:
        raise DomainError("Time must be non-negative, got %r" % t)
    band = (1 + t) * a * H
    return BandBeltrami([(-band, band, -1.0 / (2 + 2 * t))],
                        (1 + a * t) * H)


def difference_quotient(H, a, t, h):
    """``bel(psi_{H,t+h} o psi_{H,t}^-1) / h``, whose limit as h -> 0 is
    :func:`infinitesimal_beltrami`"""
    if not h > 0 or t + h > 1:
        raise DomainError("Need h > 0 and t + h <= 1, got t=%r, h=%r"
                          % (t, h))
    step = compose(stretch_map(H, a, t + h), stretch_map(H, a, t).inverse())
    return beltrami_of(step).scaled(1.0 / h)


def conformal_conjugation(spec, theta):
    """Effect of pre-composing with a rotation by *theta*: every value is
    multiplied by ``exp(-2i theta)``, which leaves moduli unchanged"""
    return spec.rotate(cexp(-2j * theta))
