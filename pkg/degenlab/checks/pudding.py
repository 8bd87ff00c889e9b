from __future__ import division, unicode_literals

from degenlab.annulus import (
    AnnulusPair, LaurentSeries, aggregate_cq, annulus_l1_norm,
    collar_aggregate_bound, laurent_l1_norm, pudding_constant,
    verify_pudding)
from degenlab.checks.suite import CheckSuite
from degenlab.configs import PuddingSuiteConfig


@CheckSuite.register("pudding")
class PuddingSuite(CheckSuite):
    """L1 domination of Laurent series on nested annuli"""
    config_type = PuddingSuiteConfig

    def run_checks(self):
        config = self.config
        pair = AnnulusPair(config.r1, config.r2, config.R)
        constant = pudding_constant(pair)
        degrees = range(config.min_degree, config.max_degree + 1)
        rows = []

        monomial_checks = [verify_pudding(pair, LaurentSeries.monomial(n))
                           for n in degrees]
        rows.extend(c.row("z^%d" % n)
                    for n, c in zip(degrees, monomial_checks))
        self.check("monomials", max(c.ratio for c in monomial_checks),
                   "<= %r" % constant, all(c.holds for c in monomial_checks))

        quadrature_error = 0.0
        for n in degrees:
            exact = laurent_l1_norm(n, pair.r1, pair.r2)
            numeric = annulus_l1_norm(LaurentSeries.monomial(n), pair.r1,
                                      pair.r2)
            quadrature_error = max(quadrature_error,
                                   abs(numeric - exact) / exact)
        self.check("monomial_quadrature", quadrature_error,
                   "<= %r" % config.tolerance,
                   quadrature_error <= config.tolerance)

        series_list = [LaurentSeries.random(self.random_state,
                                            config.min_degree,
                                            config.max_degree)
                       for _ in range(config.random_series)]
        random_checks = [verify_pudding(pair, s) for s in series_list]
        rows.extend(c.row("random_%d" % i)
                    for i, c in enumerate(random_checks))
        self.check("random_series", max(c.ratio for c in random_checks),
                   "<= %r" % constant, all(c.holds for c in random_checks))
        self.write_table("pudding_checks.csv", random_checks[0].header, rows)

        aggregate = collar_aggregate_bound(pair,
                                           series_list[:config.collars])
        self.check("collar_aggregate", aggregate.total_mass,
                   "<= %r * %r" % (aggregate_cq(pair), aggregate.flank_mass),
                   aggregate.holds)
