from __future__ import division, unicode_literals

from degenlab.checks.suite import CheckSuite
from degenlab.configs import DavidSuiteConfig
from degenlab.david import (
    Sequence, assemble_mu, certify, exp_integrability, l1_tail,
    select_budget)
from degenlab.exceptions import CertificationError


@CheckSuite.register("david")
class DavidSuite(CheckSuite):
    """Budget selection of the David construction and its exponential
    integrability certificate"""
    config_type = DavidSuiteConfig

    def run_checks(self):
        config = self.config
        p = Sequence.from_dict(config.p)
        area = Sequence.from_dict(config.area)
        budget = select_budget(p, area, config.stages)
        self.write_table(
            "david_budget.csv", ["j", "M", "p", "stage_mass", "log_margin"],
            [[j, m, p(j), budget.stage_mass(j), budget.log_margin(j)]
             for j, m in enumerate(budget.selection)])
        self.write_document("david_budget.json", budget.to_dict())
        min_margin = min(budget.log_margin(j)
                         for j in range(budget.num_stages))
        self.check("budget_margin", min_margin, "> 0", budget.is_valid())

        mu = assemble_mu(budget)
        integral = exp_integrability(mu, config.exponent,
                                     include_background=False)
        self.check("exp_integral_below_budget", integral,
                   "< %r" % p.total(), integral < p.total())

        tail = l1_tail(budget, budget.num_stages)
        head = sum(p(j) for j in range(budget.num_stages))
        self.check("l1_tail", tail, p.total() - head,
                   abs(tail - (p.total() - head)) <= 1e-12 * p.total())

        try:
            certificate = certify(mu, config.eps_grid, config.exponent)
        except CertificationError as exc:
            self.check("chebyshev_certificate", str(exc), "certificate",
                       False)
            return
        self.write_table("david_certificate.csv", certificate.header,
                         certificate.rows())
        self.write_document("david_certificate.json",
                            certificate.to_dict())
        self.check("chebyshev_certificate", certificate.C,
                   "alpha=%r" % certificate.alpha, True)
        self.check("fitted_alpha", certificate.fitted_alpha, "reported",
                   True)
