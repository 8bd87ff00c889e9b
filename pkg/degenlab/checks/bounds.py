from __future__ import division, unicode_literals

import numpy as np

from degenlab.bounds import (
    base_series_closed_form, base_series_partial_sums, geodesic_decay,
    series_sum, wolpert_contradiction, wolpert_interval)
from degenlab.checks.suite import CheckSuite
from degenlab.configs import BoundsSuiteConfig


@CheckSuite.register("bounds")
class BoundsSuite(CheckSuite):
    """Convergence series of the Bers-norm steps and the Wolpert
    certificate"""
    config_type = BoundsSuiteConfig

    def run_checks(self):
        self._check_series()
        self._check_wolpert()

    def _check_series(self):
        config = self.config
        r = config.ratio ** 2
        partial_sums = base_series_partial_sums(r, config.J)
        closed_form = base_series_closed_form(r)
        self.check("base_series", float(partial_sums[-1]), closed_form,
                   abs(partial_sums[-1] - closed_form) <= config.tolerance)
        monotone = bool(np.all(np.diff(partial_sums) >= 0))
        self.check("base_series_monotone", monotone, True, monotone)

        ledger = series_sum(config.C, config.L0, config.ratio, config.J)
        self.write_table("bounds_ledger.csv", ledger.header, ledger.rows())
        self.check("step_series_cap", ledger.partial_sum, ledger.cap,
                   ledger.partial_sum <= ledger.cap * (1 + 1e-12)
                   and ledger.cap - ledger.partial_sum <= config.tolerance)
        self.check("literal_cap", ledger.literal_cap, "reported", True)

    def _check_wolpert(self):
        rows = []
        bracketed = True
        for short, K, H in self.config.wolpert:
            n = wolpert_contradiction(short, K, H)
            lower, _ = wolpert_interval(short, K)
            below = geodesic_decay(n, H) < lower
            above = n == 1 or lower <= geodesic_decay(n - 1, H)
            bracketed &= below and above
            rows.append([short, K, H, n, geodesic_decay(n, H), lower,
                         below and above])
        self.write_table(
            "bounds_wolpert.csv",
            ["short", "K", "H", "stage", "decay", "lower", "bracketed"], rows)
        self.check("wolpert_bracketing", len(rows),
                   "decay(n) < short/K <= decay(n-1)", bracketed)
