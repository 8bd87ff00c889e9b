from __future__ import division, unicode_literals

from math import exp, log

from mock import patch

from degenlab.david.budget import assemble_mu, select_budget
from degenlab.david.certificate import (
    certify, exp_integrability, log_exp_integrability)
from degenlab.david.sequences import GeometricSequence
from degenlab.exceptions import CertificationError, InvalidInputError
from degenlab.stretch.beltrami import (
    BandBeltrami, Region, RegionBeltrami)
from degenlab.tests.utils import LabTest


class TestCertificate(LabTest):
    def setUp(self):
        budget = select_budget(GeometricSequence(1.0, 0.25),
                               GeometricSequence(1.0, 0.5), 6)
        self.mu = assemble_mu(budget)

    def test_exp_integrability_without_background(self):
        # Given
        spec = RegionBeltrami([Region.with_area("a", 0.5, 0.0),
                               Region.with_area("b", 0.25, 1.0 / 3.0)],
                              background_area=1.0)

        # When
        integral = exp_integrability(spec, 1.0, include_background=False)

        # Then
        self.assertClose(0.5 * exp(1.0) + 0.25 * exp(2.0), integral,
                         rtol=1e-12)

    def test_exp_integrability_should_add_over_regions(self):
        # Given
        first = Region.with_area("a", 0.3, 0.2)
        second = Region.with_area("b", 0.05, 0.6)
        both = RegionBeltrami([first, second])

        # When
        total = exp_integrability(both, 2.0)
        parts = exp_integrability(RegionBeltrami([first]), 2.0) \
                + exp_integrability(RegionBeltrami([second]), 2.0)

        # Then
        self.assertClose(parts, total, rtol=1e-12)

    def test_exp_integrability_should_grow_with_the_exponent(self):
        # When
        integrals = [exp_integrability(self.mu, p) for p in (0.5, 1.0, 2.0,
                                                             3.0)]

        # Then
        for smaller, larger in zip(integrals, integrals[1:]):
            self.assertLess(smaller, larger)

    def test_exp_integrability_should_stay_finite_in_log_domain(self):
        # Given
        spec = RegionBeltrami([Region("deep", -2000.0, 0.0,
                                      dilatation=1000.0)])

        # When
        log_integral = log_exp_integrability(spec, 1.0)

        # Then
        self.assertClose(-1000.0, log_integral, rtol=1e-12)
        self.assertEqual(0.0, exp_integrability(spec, 1.0))

    def test_exp_integrability_should_require_regions(self):
        # Given
        spec = BandBeltrami([(-1.0, 1.0, 0.5)], 2.0)

        # When / Then
        with self.assertRaises(InvalidInputError):
            exp_integrability(spec, 1.0)

    def test_should_certify_david_construction(self):
        # Given
        eps_grid = [0.05, 0.1, 0.25, 0.5, 1.0]

        # When
        certificate = certify(self.mu, eps_grid)

        # Then
        self.assertEqual(2.0, certificate.alpha)
        self.assertEqual(0.05, certificate.eps0)
        self.assertTrue(all(pt["holds"] for pt in certificate.points))
        self.assertGreaterEqual(certificate.fitted_alpha, certificate.alpha)
        for eps, measured, bound in certificate.rows():
            self.assertLessEqual(measured, bound)
            self.assertClose(certificate.bound(eps), bound)

    def test_certificate_constant_should_include_the_shift(self):
        # When
        certificate = certify(self.mu, [0.5], p=2.0)

        # Then
        self.assertClose(log(certificate.exp_integral) + 2.0,
                         log(certificate.C), rtol=1e-12)

    def test_should_raise_when_areas_exceed_the_bound(self):
        # Given
        target = "degenlab.david.certificate.log_exp_integrability"

        # When / Then
        with patch(target, return_value=-50.0):
            with self.assertRaises(CertificationError) as cm:
                certify(self.mu, [0.5, 1.0])
        self.assertIn("failures", cm.exception.diagnostic)

    def test_should_raise_when_integral_overflows(self):
        # Given
        spec = RegionBeltrami([Region("huge", 0.0, 0.0, dilatation=1e300)])

        # When / Then
        with self.assertRaises(CertificationError) as cm:
            certify(spec, [0.5])
        self.assertEqual(2.0, cm.exception.diagnostic["exponent"])

    def test_should_validate_inputs(self):
        # When / Then
        with self.assertRaises(InvalidInputError):
            certify(self.mu, [0.5], p=0.5)
        with self.assertRaises(InvalidInputError):
            certify(self.mu, [0.0, 0.5])
        with self.assertRaises(InvalidInputError):
            certify(self.mu, [])
