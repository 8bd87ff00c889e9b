from __future__ import division, unicode_literals

import numpy as np

from degenlab.checks.suite import CheckSuite
from degenlab.configs import CylinderSuiteConfig
from degenlab.constants import INJECTIVITY_HEIGHT_THRESHOLD, RADIUS_RATIO
from degenlab.geometry import (
    CylinderSpec, collar_length_for_width, collar_threshold, collar_width,
    collar_width_naive, construction_pair_ratio, core_length,
    inj_radius_bounds)


@CheckSuite.register("cyl")
class CylinderSuite(CheckSuite):
    """Injectivity radius bounds of the stretched cylinder and the collar
    function"""
    config_type = CylinderSuiteConfig

    def run_checks(self):
        self._check_injectivity()
        self._check_collar()

    def _check_injectivity(self):
        config = self.config
        cylinder = CylinderSpec(config.H, config.a)
        reports = [inj_radius_bounds(cylinder, t)
                   for t in np.linspace(0.0, 1.0, config.samples)]
        self.write_table(
            "cyl_inj_radius.csv", ["t", "upper_bound", "lower_bound"],
            [[r.t, r.upper_bound, r.lower_bound] for r in reports])

        upper_max = max(r.upper_bound for r in reports)
        self.check("inj_radius_upper_max", upper_max, "<= 0.5",
                   upper_max <= 0.5)
        self.check("height_above_threshold", config.H,
                   "> %r" % INJECTIVITY_HEIGHT_THRESHOLD,
                   config.H > INJECTIVITY_HEIGHT_THRESHOLD)
        ordered = all(r.lower_bound <= r.upper_bound for r in reports)
        self.check("inj_radius_bounds_ordered", ordered, True, ordered)

        ratio = construction_pair_ratio(config.H)
        self.check("construction_pair_ratio", ratio, RADIUS_RATIO,
                   abs(ratio - RADIUS_RATIO) <= config.tolerance)
        core_ratio = core_length(cylinder, 1.0) / core_length(cylinder, 0.0)
        self.check("core_length_ratio", core_ratio, 2.0 / 3.0,
                   abs(core_ratio - 2.0 / 3.0) <= 4 * np.finfo(float).eps)

    def _check_collar(self):
        config = self.config
        lengths = np.geomspace(config.collar_min, config.collar_max,
                               config.collar_grid)
        stable = collar_width(lengths)
        naive = np.array([collar_width_naive(l, dps=config.naive_dps)
                          for l in lengths])
        difference = np.abs(stable - naive)
        self.write_table(
            "cyl_collar.csv", ["length", "stable", "naive", "difference"],
            np.column_stack([lengths, stable, naive, difference]).tolist())
        max_difference = float(np.max(difference))
        self.check("collar_formula_agreement", max_difference,
                   "<= %r" % config.tolerance,
                   max_difference <= config.tolerance)

        threshold = collar_threshold(INJECTIVITY_HEIGHT_THRESHOLD)
        closed_form = collar_length_for_width(INJECTIVITY_HEIGHT_THRESHOLD)
        relative_gap = abs(threshold - closed_form) / closed_form
        self.check("collar_threshold", threshold, closed_form,
                   relative_gap <= config.threshold_rtol)
        self.check("collar_threshold_order", threshold, "in [1e-12, 1e-11]",
                   1e-12 <= threshold <= 1e-11)
