from __future__ import division, unicode_literals

from math import e, log, pi

import numpy as np
from mock import patch

from degenlab.annulus.pudding import (
    AnnulusPair, LaurentSeries, aggregate_cq, annulus_l1_norm,
    collar_aggregate_bound, laurent_l1_norm, pudding_constant,
    verify_pudding)
from degenlab.exceptions import DomainError, InvalidInputError, \
    QuadratureError
from degenlab.tests.utils import LabTest


class TestAnnulusPair(LabTest):
    def test_should_default_auxiliary_radii(self):
        # When
        pair = AnnulusPair(2.0, 3.0, 4.0)

        # Then
        self.assertEqual(1.5, pair.r0)
        self.assertEqual(3.5, pair.r3)
        self.assertDictEqual(
            {"r0": 1.5, "r1": 2.0, "r2": 3.0, "r3": 3.5, "R": 4.0},
            pair.to_dict())

    def test_should_validate_radii(self):
        # When / Then
        with self.assertRaises(DomainError):
            AnnulusPair(1.0, 3.0, 4.0)
        with self.assertRaises(DomainError):
            AnnulusPair(3.0, 2.0, 4.0)

    def test_constants(self):
        # Given
        pair = AnnulusPair(2.0, 3.0, 4.0)

        # When
        ca = pudding_constant(pair)
        cq = aggregate_cq(pair)

        # Then
        self.assertClose(16 * log(6.0), ca)
        self.assertClose(ca + 1, cq)


class TestL1Norms(LabTest):
    def test_laurent_l1_norm(self):
        # When
        norms = [laurent_l1_norm(-2, 1.0, e), laurent_l1_norm(0, 1.0, 2.0),
                 laurent_l1_norm(1, 0.5, 1.0)]

        # Then
        self.assertClose([2 * pi, 3 * pi, 2 * pi * 0.875 / 3], norms)
        with self.assertRaises(DomainError):
            laurent_l1_norm(1, 2.0, 1.0)

    def test_laurent_l1_norm_should_add_over_nested_annuli(self):
        for n in (-3, -2, 0, 2):
            # When
            whole = laurent_l1_norm(n, 1.0, 4.0)
            split = laurent_l1_norm(n, 1.0, 2.5) + laurent_l1_norm(n, 2.5, 4.0)

            # Then
            self.assertClose(whole, split, rtol=1e-12)

    def test_quadrature_should_match_exact_monomial_norms(self):
        for n in (-5, -2, -1, 0, 3, 5):
            # Given
            series = LaurentSeries.monomial(n, 2.0)

            # When
            numeric = annulus_l1_norm(series, 1.0, 2.0)

            # Then
            self.assertClose(2.0 * laurent_l1_norm(n, 1.0, 2.0), numeric,
                             rtol=1e-10)

    def test_quadrature_on_degenerate_annulus(self):
        # When
        norm = annulus_l1_norm(LaurentSeries.monomial(1), 2.0, 2.0)

        # Then
        self.assertEqual(0.0, norm)

    def test_quadrature_should_raise_when_resolutions_disagree(self):
        # Given
        target = "degenlab.annulus.pudding._polar_quadrature"

        # When / Then
        with patch(target, side_effect=[1.0, 2.0]):
            with self.assertRaises(QuadratureError) as cm:
                annulus_l1_norm(LaurentSeries.monomial(1), 1.0, 2.0)
        self.assertEqual(1.0, cm.exception.coarse)
        self.assertEqual(2.0, cm.exception.fine)


class TestLaurentSeries(LabTest):
    def test_should_drop_zero_coefficients(self):
        # When
        series = LaurentSeries({-1: 0.0, 2: 1.5, 3: 0})

        # Then
        self.assertListEqual([2], series.degrees)
        self.assertTrue(series.is_monomial)
        self.assertClose(6.0, series(2.0))

    def test_random_series_should_be_reproducible(self):
        # When
        first = LaurentSeries.random(3, -2, 2)
        second = LaurentSeries.random(np.random.RandomState(3), -2, 2)

        # Then
        self.assertDictEqual(first.coefficients, second.coefficients)
        self.assertListEqual([-2, -1, 0, 1, 2], first.degrees)
        self.assertTrue(all(-1 <= c <= 1
                            for c in first.coefficients.values()))
        with self.assertRaises(InvalidInputError):
            LaurentSeries.random(0, 2, 1)

    def test_should_serialize_with_string_degrees(self):
        # Given
        series = LaurentSeries({-3: 0.5, 1: -2.0})

        # When
        series_dict = series.to_dict()

        # Then
        self.assertDictEqual({"-3": 0.5, "1": -2.0}, series_dict)
        self.assertDictEqual(series.coefficients,
                             LaurentSeries.from_dict(series_dict).coefficients)


class TestPudding(LabTest):
    def setUp(self):
        self.pair = AnnulusPair(2.0, 3.0, 4.0)

    def test_should_hold_for_monomials(self):
        for n in range(-5, 6):
            # When
            check = verify_pudding(self.pair, LaurentSeries.monomial(n))

            # Then
            self.assertTrue(check.holds, "Failed for z^%d: %r" % (n, check))
            self.assertLess(check.ratio, check.constant)

    def test_monomial_norms_should_be_exact(self):
        # When
        check = verify_pudding(self.pair, {-2: 1.0})

        # Then
        self.assertClose(2 * pi * log(1.5), check.lhs)
        self.assertClose(2 * pi * (log(2.0) + log(4.0 / 3.0)), check.rhs)

    def test_should_hold_for_random_series(self):
        # Given
        rs = np.random.RandomState(0)

        for _ in range(10):
            # When
            check = verify_pudding(self.pair, LaurentSeries.random(rs))

            # Then
            self.assertTrue(check.holds)

    def test_zero_series(self):
        # When
        check = verify_pudding(self.pair, LaurentSeries({}))

        # Then
        self.assertEqual(0.0, check.lhs)
        self.assertEqual(0.0, check.ratio)
        self.assertTrue(check.holds)
        self.assertEqual(
            ["zero", 0.0, 0.0, check.constant, 0.0, True], check.row("zero"))

    def test_collar_aggregate_bound(self):
        # Given
        rs = np.random.RandomState(1)
        series_list = [LaurentSeries.random(rs) for _ in range(3)]

        # When
        aggregate = collar_aggregate_bound(self.pair, series_list)

        # Then
        self.assertTrue(aggregate.holds)
        self.assertEqual(3, aggregate.collars)
        self.assertClose(aggregate_cq(self.pair), aggregate.cq)
        self.assertGreater(aggregate.total_mass, aggregate.flank_mass)
        with self.assertRaises(InvalidInputError):
            collar_aggregate_bound(self.pair, [])
