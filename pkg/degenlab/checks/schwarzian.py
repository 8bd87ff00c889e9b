from __future__ import division, unicode_literals

import numpy as np

from degenlab.checks.suite import CheckSuite
from degenlab.configs import SchwarzianSuiteConfig
from degenlab.schwarzian import (
    LambdaMap, MobiusMap, bers_derivative_kernel, counterexample_scan,
    schwarzian, schwarzian_fd)

# post-composed with z + 1/(2z) in the cocycle check; keeps |z| in [1.5, 3]
# away from the critical points of the outer map
COCYCLE_INNER = MobiusMap(1, 4, 0.1, 1)


def annulus_samples(random_state, count, r_min=1.5, r_max=3.0):
    radii = random_state.uniform(r_min, r_max, count)
    angles = random_state.uniform(0, 2 * np.pi, count)
    return radii * np.exp(1j * angles)


@CheckSuite.register("schwarzian")
class SchwarzianSuite(CheckSuite):
    """Schwarzian derivatives, the Bers-norm counterexample and the
    derivative kernel"""
    config_type = SchwarzianSuiteConfig

    def run_checks(self):
        self._check_closed_form()
        self._check_mobius()
        self._check_cocycle()
        self._check_counterexample()
        self._check_kernel()

    def _check_closed_form(self):
        config = self.config
        points = annulus_samples(self.random_state, config.fd_points)
        max_error = 0.0
        for lam in config.fd_lambdas:
            f = LambdaMap(lam)
            for z in points:
                numeric = schwarzian_fd(f, z, h=config.fd_step)
                max_error = max(max_error,
                                abs(numeric - f.closed_schwarzian(z)))
        self.check("closed_form_vs_fd", max_error,
                   "<= %r" % config.fd_tolerance,
                   max_error <= config.fd_tolerance)

    def _check_mobius(self):
        config = self.config
        rs = self.random_state
        points = annulus_samples(rs, config.fd_points)
        max_value = 0.0
        for _ in range(10):
            a, b, c = rs.uniform(-1, 1, 3) + 1j * rs.uniform(-1, 1, 3)
            c *= 0.5
            d = 4 + rs.uniform(-1, 1) + 1j * rs.uniform(-1, 1)
            if abs(a * d - b * c) < 1e-3:
                continue
            values = schwarzian(MobiusMap(a, b, c, d), points)
            max_value = max(max_value, float(np.max(np.abs(values))))
        self.check("mobius_schwarzian", max_value,
                   "<= %r" % config.mobius_tolerance,
                   max_value <= config.mobius_tolerance)

    def _check_cocycle(self):
        config = self.config
        outer = LambdaMap(0.5)
        inner = COCYCLE_INNER
        composed = outer.compose(inner)
        points = annulus_samples(self.random_state, 20)
        max_gap = 0.0
        for z in points:
            lhs = schwarzian_fd(composed, z, h=config.fd_step)
            rhs = outer.closed_schwarzian(inner(z)) \
                  * inner.derivative(z) ** 2 + schwarzian(inner, z)
            max_gap = max(max_gap, abs(lhs - rhs))
        self.check("schwarzian_cocycle", max_gap,
                   "<= %r" % config.fd_tolerance,
                   max_gap <= config.fd_tolerance)

    def _check_counterexample(self):
        config = self.config
        table = counterexample_scan(config.lambdas, config.grid,
                                    config.tolerance)
        self.write_table("schwarzian_norms.csv", table.header, table.rows())
        self.check("counterexample_norm", table.min_norm,
                   ">= %r" % (6.0 - config.tolerance), table.holds)

    def _check_kernel(self):
        config = self.config
        z = config.kernel_point
        cases = [
            ("kernel_constant", lambda zeta: np.ones_like(zeta),
             -6.0 / z ** 4),
            ("kernel_conjugate", np.conj, -12.0 / z ** 5),
        ]
        results = []
        for name, nu, expected in cases:
            result = bers_derivative_kernel(nu, z, config.kernel_cells)
            results.append(dict(result.to_dict(), name=name,
                                expected=expected))
            self.check(name, result.value, expected,
                       abs(result.value - expected) <= config.tolerance)
        self.write_document("schwarzian_kernel.json", results)
