from __future__ import division, unicode_literals

from abc import ABCMeta, abstractmethod
from builtins import object

import numpy as np
from future.utils import with_metaclass

from degenlab.exceptions import DomainError, InvalidInputError


class AnalyticMap(with_metaclass(ABCMeta, object)):
    """Holomorphic map with closed-form derivatives up to order 3"""

    @abstractmethod
    def __call__(self, z):
        pass

    @abstractmethod
    def derivative(self, z, order=1):
        """Value of the *order*-th complex derivative at *z*, order in
        {1, 2, 3}"""
        pass

    def compose(self, inner):
        """The map ``self o inner``"""
        return ComposedMap(self, inner)

    @staticmethod
    def _check_order(order):
        if order not in (1, 2, 3):
            raise InvalidInputError("Derivative order must be 1, 2 or 3, "
                                    "got %r" % order)


class MobiusMap(AnalyticMap):
    """``z -> (a z + b) / (c z + d)`` with ``ad - bc != 0``

    Example:

        >>> m = MobiusMap(2, 1, 1, 1)
        >>> m(1.0)
        1.5
        >>> m.derivative(0.0)
        1.0
    """

    def __init__(self, a, b, c, d):
        determinant = a * d - b * c
        if determinant == 0:
            raise DomainError("Degenerate Mobius map, ad - bc = 0")
        self.a, self.b, self.c, self.d = a, b, c, d
        self.determinant = determinant

    @classmethod
    def identity(cls):
        return cls(1, 0, 0, 1)

    def __call__(self, z):
        return (self.a * z + self.b) / (self.c * z + self.d)

    def derivative(self, z, order=1):
        self._check_order(order)
        denominator = self.c * z + self.d
        if order == 1:
            return self.determinant / denominator ** 2
        if order == 2:
            return -2 * self.c * self.determinant / denominator ** 3
        return 6 * self.c ** 2 * self.determinant / denominator ** 4

    def __repr__(self):
        return "MobiusMap(%r, %r, %r, %r)" % (self.a, self.b, self.c, self.d)


class LambdaMap(AnalyticMap):
    """``f_lambda(z) = z + lambda / z``, holomorphic on ``|z| > 0``"""

    def __init__(self, lam):
        self.lam = lam

    def __call__(self, z):
        return z + self.lam / z

    def derivative(self, z, order=1):
        self._check_order(order)
        if order == 1:
            return 1 - self.lam / z ** 2
        if order == 2:
            return 2 * self.lam / z ** 3
        return -6 * self.lam / z ** 4

    def closed_schwarzian(self, z):
        """``S(f_lambda)(z) = -6 lambda / (z^2 - lambda)^2``"""
        return -6 * self.lam / (z ** 2 - self.lam) ** 2

    def __repr__(self):
        return "LambdaMap(%r)" % (self.lam,)


class CounterexampleMap(LambdaMap):
    """Quasiconformal map of the plane which is ``z + lambda conj(z)`` on
    the unit disk and ``z + lambda / z`` outside it

    The two formulas agree on the unit circle, the Beltrami coefficient is
    the constant *lambda* on the disk and 0 outside.
    """

    def __init__(self, lam):
        if not abs(lam) < 1:
            raise DomainError("|lambda| must be < 1, got %r" % (lam,))
        super(CounterexampleMap, self).__init__(lam)

    def interior(self, z):
        return z + self.lam * np.conj(z)

    def exterior(self, z):
        return LambdaMap.__call__(self, z)

    def __call__(self, z):
        z = np.asarray(z, dtype=complex)
        values = np.where(np.abs(z) < 1, self.interior(z),
                          self.exterior(np.where(z == 0, 1, z)))
        if values.ndim == 0:
            return values.item()
        return values

    def beltrami_coefficient(self, z):
        z = np.asarray(z)
        return np.where(np.abs(z) < 1, self.lam, 0.0)

    def seam_mismatch(self, samples=256):
        """Sup over the unit circle of ``|interior - exterior|``"""
        circle = np.exp(2j * np.pi * np.arange(samples) / samples)
        return float(np.max(np.abs(self.interior(circle)
                                   - self.exterior(circle))))

    def __repr__(self):
        return "CounterexampleMap(%r)" % (self.lam,)


class ComposedMap(AnalyticMap):
    """``outer o inner`` with derivatives given by the chain rule"""

    def __init__(self, outer, inner):
        self.outer = outer
        self.inner = inner

    def __call__(self, z):
        return self.outer(self.inner(z))

    def derivative(self, z, order=1):
        self._check_order(order)
        w = self.inner(z)
        g1 = self.inner.derivative(z, 1)
        if order == 1:
            return self.outer.derivative(w, 1) * g1
        g2 = self.inner.derivative(z, 2)
        if order == 2:
            return self.outer.derivative(w, 2) * g1 ** 2 \
                   + self.outer.derivative(w, 1) * g2
        g3 = self.inner.derivative(z, 3)
        return self.outer.derivative(w, 3) * g1 ** 3 \
               + 3 * self.outer.derivative(w, 2) * g1 * g2 \
               + self.outer.derivative(w, 1) * g3

    def __repr__(self):
        return "ComposedMap(%r, %r)" % (self.outer, self.inner)
