from __future__ import division, unicode_literals

from abc import ABCMeta, abstractmethod
from math import exp, isinf, log

from future.utils import with_metaclass
from scipy.special import zeta

from degenlab.common.from_dict import FromDict
from degenlab.common.registrable import Registrable
from degenlab.constants import KIND
from degenlab.exceptions import InvalidInputError


class Sequence(with_metaclass(ABCMeta, FromDict, Registrable)):
    """Positive sequence indexed from 0, described in closed form so that
    summability, tails and vanishing are known exactly"""

    @property
    def kind(self):
        return Sequence.registered_name(type(self))

    @abstractmethod
    def log_value(self, n):
        pass

    def __call__(self, n):
        return exp(self.log_value(n))

    @abstractmethod
    def tail_sum(self, n):
        """Sum of the terms of index ``>= n``, ``inf`` when divergent"""

    def total(self):
        return self.tail_sum(0)

    @property
    def is_summable(self):
        return not isinf(self.total())

    @property
    @abstractmethod
    def vanishes(self):
        """Whether the terms tend to 0"""

    @property
    @abstractmethod
    def strictly_decreasing(self):
        pass

    @abstractmethod
    def to_dict(self):
        pass

    @classmethod
    def from_dict(cls, obj_dict):
        obj_dict = dict(obj_dict)
        kind = obj_dict.pop(KIND, None)
        sequence_type = cls if kind is None else Sequence.by_name(kind)
        return FromDict.from_dict.__func__(sequence_type, obj_dict)


@Sequence.register("geometric")
class GeometricSequence(Sequence):
    """``first * ratio^n``

    Example:

        >>> p = GeometricSequence(1.0, 0.25)
        >>> p.total()
        1.3333333333333333
    """

    def __init__(self, first=1.0, ratio=0.5):
        if not first > 0 or not ratio > 0:
            raise InvalidInputError("Geometric sequences need positive first "
                                    "term and ratio")
        self.first = float(first)
        self.ratio = float(ratio)

    def log_value(self, n):
        return log(self.first) + n * log(self.ratio)

    def __call__(self, n):
        return self.first * self.ratio ** n

    def tail_sum(self, n):
        if self.ratio >= 1:
            return float("inf")
        return self(n) / (1 - self.ratio)

    @property
    def vanishes(self):
        return self.ratio < 1

    @property
    def strictly_decreasing(self):
        return self.ratio < 1

    def to_dict(self):
        return {KIND: self.kind, "first": self.first, "ratio": self.ratio}


@Sequence.register("power")
class PowerSequence(Sequence):
    """``scale * (n + shift)^(-exponent)``, whose tails are Hurwitz zeta
    values"""

    def __init__(self, scale=1.0, exponent=2.0, shift=1.0):
        if not scale > 0 or not shift > 0:
            raise InvalidInputError("Power sequences need positive scale and "
                                    "shift")
        self.scale = float(scale)
        self.exponent = float(exponent)
        self.shift = float(shift)

    def log_value(self, n):
        return log(self.scale) - self.exponent * log(n + self.shift)

    def tail_sum(self, n):
        if self.exponent <= 1:
            return float("inf")
        return self.scale * float(zeta(self.exponent, n + self.shift))

    @property
    def vanishes(self):
        return self.exponent > 0

    @property
    def strictly_decreasing(self):
        return self.exponent > 0

    def to_dict(self):
        return {KIND: self.kind, "scale": self.scale,
                "exponent": self.exponent, "shift": self.shift}
