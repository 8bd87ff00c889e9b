"""Least-squares solver for ``f_zbar = mu f_z`` on a cylinder grid

The unknown is ``u = f - z``, periodic in x. On each cell the derivatives
of u are taken with the box stencil (average of the two edge differences in
each direction), which is exact on maps that are affine on the cell. With
``f_z = 1 + u_z`` and ``f_zbar = u_zbar`` the equation reads
``u_zbar - mu u_z = mu`` with mu sampled at the cell centre. The top and
bottom node rows are pinned by the normalization, which leaves one more
cell row than unknown rows; the overdetermined system is solved through its
normal equations.
"""
from __future__ import division, unicode_literals

import logging
from math import e, log, pi

import numpy as np
import scipy.sparse as sp
import scipy.sparse.linalg as spla

from degenlab.common.log_utils import log_elapsed_time
from degenlab.exceptions import DomainError, SolverError

logger = logging.getLogger(__name__)

# (row offset, column offset, sign of d/dx weight, sign of d/dy weight)
BOX_STENCIL = [(0, 0, -1, -1), (0, 1, 1, -1), (1, 0, -1, 1), (1, 1, 1, 1)]


class Normalization(object):
    """Prescribed values of the solution on the top and bottom node rows

    Args:
        boundary_map (callable): maps complex node coordinates to the
            prescribed values of f
        description (str): human readable description, echoed in reports
    """

    def __init__(self, boundary_map, description):
        self.boundary_map = boundary_map
        self.description = description

    @classmethod
    def identity(cls):
        return cls(lambda z: z, "identity")

    @classmethod
    def from_vertical_map(cls, vertical_map):
        def boundary_map(z):
            return z.real + 1j * vertical_map(z.imag)

        return cls(boundary_map, "x + i m(y), m=%r" % vertical_map)

    def __call__(self, z):
        return self.boundary_map(z)


class GridMap(object):
    """Discrete solution: values of f at the grid nodes, shape
    ``(ny + 1, nx)``"""

    def __init__(self, geometry, f, residual_norm, normalization):
        self.geometry = geometry
        self.f = f
        self.f.setflags(write=False)
        self.residual_norm = residual_norm
        self.normalization = normalization

    def displacement(self):
        return self.f - self.geometry.nodes()

    def sup_distance_to_identity(self):
        return float(np.max(np.abs(self.displacement())))

    def max_error(self, exact_map):
        """Sup distance at the nodes to ``exact_map(z)``"""
        nodes = self.geometry.nodes()
        return float(np.max(np.abs(self.f - exact_map(nodes))))

    @property
    def header(self):
        return ["x", "y", "re_f", "im_f"]

    def rows(self):
        nodes = self.geometry.nodes()
        return [[float(z.real), float(z.imag), float(w.real), float(w.imag)]
                for z, w in zip(nodes.ravel(), self.f.ravel())]

    def to_dict(self):
        return {
            "geometry": self.geometry.to_dict(),
            "residual_norm": self.residual_norm,
            "normalization": self.normalization
        }


def _assemble(mu_values, u, geometry):
    ny, nx = mu_values.shape
    dx, dy = geometry.dx, geometry.dy
    cell_j, cell_k = np.meshgrid(np.arange(ny), np.arange(nx), indexing="ij")
    cell_index = (cell_j * nx + cell_k).ravel()
    mu = mu_values.ravel()
    rhs = mu.copy()
    rows, cols, data = [], [], []
    for dj, dk, sx, sy in BOX_STENCIL:
        wx = sx / (2 * dx)
        wy = sy / (2 * dy)
        coef = 0.5 * (wx + 1j * wy) - mu * 0.5 * (wx - 1j * wy)
        node_j = (cell_j + dj).ravel()
        node_k = ((cell_k + dk) % nx).ravel()
        interior = (node_j >= 1) & (node_j <= ny - 1)
        rows.append(cell_index[interior])
        cols.append((node_j[interior] - 1) * nx + node_k[interior])
        data.append(coef[interior])
        boundary = ~interior
        rhs[boundary] -= coef[boundary] * u[node_j[boundary],
                                            node_k[boundary]]
    matrix = sp.coo_matrix(
        (np.concatenate(data), (np.concatenate(rows), np.concatenate(cols))),
        shape=(ny * nx, (ny - 1) * nx)).tocsr()
    return matrix, rhs


@log_elapsed_time(logger, logging.INFO,
                  "Beltrami grid solve done in {elapsed_time:.3f}s")
def solve(mu, normalization):
    """Solves the discrete Beltrami equation for a sampled coefficient

    Args:
        mu (:class:`.GridBeltrami`): coefficient sampled on the cells
        normalization (:class:`Normalization`): values of f on the top and
            bottom node rows

    Returns:
        :class:`GridMap`

    Raises:
        DomainError: when ``sup |mu| >= 1`` on the samples
        SolverError: when the normal equations are singular
    """
    geometry = mu.geometry
    if mu.sup_modulus() >= 1:
        raise DomainError("The grid solver requires sup |mu| < 1, got %r"
                          % mu.sup_modulus())
    ny, nx = geometry.ny, geometry.nx
    nodes = geometry.nodes()
    u = np.zeros((ny + 1, nx), dtype=complex)
    u[0] = normalization(nodes[0]) - nodes[0]
    u[ny] = normalization(nodes[ny]) - nodes[ny]

    matrix, rhs = _assemble(mu.values, u, geometry)
    adjoint = matrix.conj().transpose().tocsr()
    normal_matrix = (adjoint * matrix).tocsc()
    try:
        factor = spla.splu(normal_matrix)
    except RuntimeError as exc:
        raise SolverError("Normal equations are singular: %s" % exc)
    solution = factor.solve(adjoint * rhs)
    if not np.all(np.isfinite(solution)):
        raise SolverError("Non-finite values in the discrete solution")

    residual = matrix * solution - rhs
    residual_norm = float(np.sqrt(np.sum(np.abs(residual) ** 2)
                                  * geometry.dx * geometry.dy))
    u[1:ny] = solution.reshape(ny - 1, nx)
    logger.debug("Grid %dx%d solved, residual norm %.3e", nx, ny,
                 residual_norm)
    return GridMap(geometry, nodes + u, residual_norm,
                   normalization.description)


def modulus_of_continuity_bound(a, b, K_l1):
    """``16 pi^2 (1 + |a|^2 + |b|^2) / log(e + 1/|a - b|) * K_l1``, the
    bound on ``|f(a) - f(b)|`` for normalized maps with integrable
    distortion; 0 when ``a = b``

    Example:

        >>> round(modulus_of_continuity_bound(0, 1, 1.0), 1)
        240.5
    """
    distance = abs(a - b)
    if distance == 0:
        return 0.0
    return 16 * pi ** 2 * (1 + abs(a) ** 2 + abs(b) ** 2) \
           / log(e + 1.0 / distance) * K_l1
