from __future__ import division, unicode_literals

import numpy as np

from degenlab.checks.suite import CheckSuite
from degenlab.configs import SolverSuiteConfig
from degenlab.constants import DEFAULT_BAND_FRACTION
from degenlab.solver import (
    GridBeltrami, GridField, GridGeometry, Normalization,
    convergence_experiment, sample_bands, solve)
from degenlab.stretch import PiecewiseVerticalMap, beltrami_of, stretch_map


@CheckSuite.register("solve")
class SolverSuite(CheckSuite):
    """Grid Beltrami solver against exact solutions, and the
    convergence-to-identity experiment"""
    config_type = SolverSuiteConfig

    def run_checks(self):
        self._check_conformal()
        self._check_stretch()
        self._check_constant()
        self._check_convergence()

    def _geometry(self):
        config = self.config
        return GridGeometry.symmetric(config.nx, config.ny, config.H)

    def _check_conformal(self):
        geometry = self._geometry()
        mu = GridBeltrami(GridField(geometry, np.zeros(
            (geometry.ny, geometry.nx), dtype=complex)))
        solution = solve(mu, Normalization.identity())
        error = solution.sup_distance_to_identity()
        tolerance = self.config.identity_tolerance
        self.check("conformal_identity", error, "<= %r" % tolerance,
                   error <= tolerance)

    def _check_stretch(self):
        config = self.config
        geometry = self._geometry()
        m = stretch_map(config.H, DEFAULT_BAND_FRACTION, 1.0)
        mu = sample_bands(beltrami_of(m), geometry)
        solution = solve(mu, Normalization.from_vertical_map(m))
        error = solution.max_error(lambda z: z.real + 1j * m(z.imag))
        self.write_table("solve_stretch.csv", solution.header,
                         solution.rows())
        self.write_document("solve_stretch.json", solution.to_dict())
        self.check("stretch_solution_error", error,
                   "<= %r" % config.tolerance, error <= config.tolerance)
        self.check("stretch_residual", solution.residual_norm,
                   "<= %r" % config.tolerance,
                   solution.residual_norm <= config.tolerance)

    def _check_constant(self):
        config = self.config
        geometry = self._geometry()
        mu = GridBeltrami(GridField(geometry, np.full(
            (geometry.ny, geometry.nx), -1.0 / 3.0, dtype=complex)))
        linear = PiecewiseVerticalMap.linear(config.H, 2.0)
        solution = solve(mu, Normalization.from_vertical_map(linear))
        error = solution.max_error(lambda z: z.real + 2j * z.imag)
        self.check("constant_coefficient_solution", error,
                   "<= %r" % config.tolerance, error <= config.tolerance)

    def _check_convergence(self):
        config = self.config
        table = convergence_experiment(config.stages, config.experiment_grid,
                                       config.supersample)
        self.write_table("solve_convergence.csv", table.header, table.rows())
        self.check("convergence_decreasing", table.sup_distances,
                   "strictly decreasing", table.strictly_decreasing)
        ratio = table.final_ratio
        self.check("convergence_final_ratio", ratio, "< 0.25",
                   ratio is not None and ratio < 0.25)
