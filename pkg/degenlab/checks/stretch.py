from __future__ import division, unicode_literals

import numpy as np

from degenlab.checks.suite import CheckSuite
from degenlab.configs import StretchSuiteConfig
from degenlab.constants import DEFAULT_BAND_FRACTION
from degenlab.stretch import (
    beltrami_of, conformal_conjugation, difference_quotient,
    infinitesimal_beltrami, max_dilatation, standard_deformation, stretch_map)


def finite_difference_beltrami(vertical_map, ys, step):
    """Coefficient ``f_zbar / f_z`` of ``x + i m(y)`` from centred
    differences of m, using ``f_x = 1`` and ``f_y = i m'(y)``"""
    slopes = (vertical_map(ys + step) - vertical_map(ys - step)) / (2 * step)
    return (1 - slopes) / (1 + slopes)


def sample_heights(vertical_map, samples, margin):
    """Uniform heights of the source interval kept at distance > *margin*
    from the breakpoints and the boundary"""
    h = vertical_map.source_halfheight
    ys = np.linspace(-h, h, samples + 2)[1:-1]
    keep = np.abs(np.abs(ys) - h) > margin
    for b in vertical_map.breakpoints:
        keep &= np.abs(ys - b) > margin
    return ys[keep]


@CheckSuite.register("stretch")
class StretchSuite(CheckSuite):
    """Beltrami coefficients and dilatations of stretch deformations"""
    config_type = StretchSuiteConfig

    def run_checks(self):
        self._check_coefficients()
        self._check_dilatation_growth()
        self._check_infinitesimal()

    def _check_coefficients(self):
        config = self.config
        rows = []
        max_error = 0.0
        reference = None
        core_values = []
        height_independent = True
        for H in config.heights:
            m = stretch_map(H, DEFAULT_BAND_FRACTION, config.t)
            spec = beltrami_of(m)
            ys = sample_heights(m, config.samples, 2 * config.fd_step)
            numeric = finite_difference_beltrami(m, ys, config.fd_step)
            exact = spec.value_at(ys)
            max_error = max(max_error, float(np.max(np.abs(numeric - exact))))
            rows.extend([H, y, n, e.real] for y, n, e in
                        zip(ys.tolist(), numeric.tolist(), exact.tolist()))
            values = [v for _, _, v in spec.bands]
            core_values.append(spec.value_at(0.0))
            if reference is None:
                reference = values
            height_independent &= values == reference
            rotated = conformal_conjugation(spec, np.pi / 2)
            self.check("conjugation_keeps_dilatation_H=%r" % H,
                       rotated.max_dilatation(), spec.max_dilatation(),
                       abs(rotated.max_dilatation() - spec.max_dilatation())
                       <= config.tolerance)
        self.write_table("stretch_beltrami.csv",
                         ["H", "y", "fd_mu", "exact_mu"], rows)
        self.check("fd_beltrami_max_error", max_error,
                   "<= %r" % config.tolerance, max_error <= config.tolerance)
        core_value = -config.t / (2 + config.t)
        core_error = max(abs(v - core_value) for v in core_values)
        self.check("core_band_value", core_values[0].real, core_value,
                   core_error <= config.tolerance)
        self.check("coefficient_independent_of_height", height_independent,
                   True, height_independent)

    def _check_dilatation_growth(self):
        config = self.config
        rows = []
        exact = True
        for j in range(1, config.max_stage + 1):
            dilatation = max_dilatation(standard_deformation(
                config.heights[0], j))
            rows.append([j, dilatation, 2.0 ** j])
            exact &= dilatation == 2.0 ** j
        self.write_table("stretch_dilatation.csv",
                         ["j", "max_dilatation", "expected"], rows)
        self.check("dilatation_growth", rows[-1][1],
                   "2^j for j=1..%d" % config.max_stage, exact)

    def _check_infinitesimal(self):
        config = self.config
        H = config.heights[0]
        t = 0.0
        expected = infinitesimal_beltrami(t, H).value_at(0.0).real
        errors = []
        for h in config.quotient_steps:
            quotient = difference_quotient(H, DEFAULT_BAND_FRACTION, t, h)
            errors.append(abs(quotient.value_at(0.0) - expected))
        decreasing = all(b < a for a, b in zip(errors, errors[1:]))
        self.check("difference_quotient_trend", errors,
                   "decreasing towards %r" % expected, decreasing)
