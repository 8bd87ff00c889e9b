from __future__ import division, unicode_literals

import logging

import numpy as np

from degenlab.common.utils import complex_from_jsonable, to_jsonable
from degenlab.constants import GRID, KIND, X_PERIOD
from degenlab.exceptions import DomainError, InvalidInputError
from degenlab.stretch.beltrami import BeltramiSpec

logger = logging.getLogger(__name__)

MIN_GRID_SIZE = 8


class GridGeometry(object):
    """Rectangular grid on ``[0, 2 pi) x [y_min, y_max]``, periodic in x

    The grid has *nx* columns of nodes (column *nx* is identified with
    column 0) and ``ny + 1`` rows of nodes, hence ``ny * nx`` cells.
    """

    def __init__(self, nx, ny, y_min, y_max, x_period=X_PERIOD):
        if nx < MIN_GRID_SIZE or ny < MIN_GRID_SIZE:
            raise InvalidInputError("Grid sizes must be at least %d, got "
                                    "%dx%d" % (MIN_GRID_SIZE, nx, ny))
        if not y_max > y_min:
            raise InvalidInputError("Empty vertical range [%r, %r]"
                                    % (y_min, y_max))
        self.nx = int(nx)
        self.ny = int(ny)
        self.y_min = float(y_min)
        self.y_max = float(y_max)
        self.x_period = float(x_period)

    @classmethod
    def symmetric(cls, nx, ny, halfheight):
        return cls(nx, ny, -halfheight, halfheight)

    @property
    def dx(self):
        return self.x_period / self.nx

    @property
    def dy(self):
        return (self.y_max - self.y_min) / self.ny

    @property
    def node_x(self):
        return self.dx * np.arange(self.nx)

    @property
    def node_y(self):
        return self.y_min + self.dy * np.arange(self.ny + 1)

    def nodes(self):
        """Complex node coordinates, shape ``(ny + 1, nx)``"""
        return self.node_x[None, :] + 1j * self.node_y[:, None]

    def cell_centres(self):
        """Complex cell-centre coordinates, shape ``(ny, nx)``"""
        x = self.node_x + self.dx / 2
        y = self.node_y[:-1] + self.dy / 2
        return x[None, :] + 1j * y[:, None]

    def row_of(self, y, tol=1e-9):
        """Index of the node row at height *y*, None when *y* falls between
        rows"""
        position = (y - self.y_min) / self.dy
        row = int(round(position))
        if abs(position - row) <= tol and 0 <= row <= self.ny:
            return row
        return None

    def to_dict(self):
        return {"nx": self.nx, "ny": self.ny, "y_min": self.y_min,
                "y_max": self.y_max, "x_period": self.x_period}

    @classmethod
    def from_dict(cls, obj_dict):
        return cls(**obj_dict)


class GridField(object):
    """Complex samples at the cell centres of a :class:`GridGeometry`"""

    def __init__(self, geometry, values):
        values = np.asarray(values, dtype=complex)
        if values.shape != (geometry.ny, geometry.nx):
            raise InvalidInputError("Expected values of shape %r, got %r"
                                    % ((geometry.ny, geometry.nx),
                                       values.shape))
        if not np.all(np.isfinite(values)):
            raise InvalidInputError("Grid values must be finite")
        self.geometry = geometry
        self.values = values

    def translated(self, columns):
        """Field shifted by *columns* cells in the x direction"""
        return GridField(self.geometry, np.roll(self.values, columns, axis=1))


@BeltramiSpec.register(GRID)
class GridBeltrami(BeltramiSpec):
    """Beltrami coefficient sampled on the cells of a grid"""

    def __init__(self, field):
        self.field = field

    @property
    def geometry(self):
        return self.field.geometry

    @property
    def values(self):
        return self.field.values

    def sup_modulus(self):
        return float(np.max(np.abs(self.values)))

    def rotate(self, factor):
        return GridBeltrami(GridField(self.geometry, self.values * factor))

    def translated(self, columns):
        return GridBeltrami(self.field.translated(columns))

    def k_l1_norm(self):
        """Integral of the dilatation over the grid"""
        modulus = np.abs(self.values)
        if np.any(modulus >= 1):
            raise DomainError("Dilatation is infinite where |mu| >= 1")
        dilatation = (1 + modulus) / (1 - modulus)
        return float(np.sum(dilatation) * self.geometry.dx
                     * self.geometry.dy)

    def to_dict(self):
        return {
            KIND: self.kind,
            "geometry": self.geometry.to_dict(),
            "values": [[to_jsonable(v) for v in row] for row in self.values]
        }

    @classmethod
    def from_dict(cls, obj_dict):
        geometry = GridGeometry.from_dict(obj_dict["geometry"])
        values = [[complex_from_jsonable(v) for v in row]
                  for row in obj_dict["values"]]
        return cls(GridField(geometry, values))


def sample_bands(spec, geometry):
    """Samples a band coefficient at the cell centres

    Raises:
        InvalidInputError: when a band interface does not fall on a node
            row, since the solver is only exact on aligned grids
    """
    for interface in spec.interfaces():
        if geometry.y_min < interface < geometry.y_max \
                and geometry.row_of(interface) is None:
            raise InvalidInputError(
                "Band interface y=%r is not on a grid row (dy=%r)"
                % (interface, geometry.dy))
    centres_y = geometry.cell_centres().imag
    return GridBeltrami(GridField(geometry, spec.value_at(centres_y)))


def sample_function(fn, geometry, supersample=1):
    """Averages ``fn(z)`` over ``supersample**2`` points in each cell"""
    if supersample < 1:
        raise InvalidInputError("Supersampling factor must be >= 1")
    offsets = (np.arange(supersample) + 0.5) / supersample
    total = np.zeros((geometry.ny, geometry.nx), dtype=complex)
    corners = geometry.nodes()[:-1, :]
    for ox in offsets:
        for oy in offsets:
            total += fn(corners + ox * geometry.dx + 1j * oy * geometry.dy)
    return GridBeltrami(GridField(geometry, total / supersample ** 2))
