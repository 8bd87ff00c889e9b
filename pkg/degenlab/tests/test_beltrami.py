from __future__ import division, unicode_literals

from cmath import exp as cexp
from math import log

import numpy as np

from degenlab.exceptions import ContractViolation, DomainError, \
    InvalidInputError
from degenlab.stretch.beltrami import (
    BandBeltrami, BeltramiSpec, Region, RegionBeltrami, beltrami_of,
    conformal_conjugation, difference_quotient, disjoint_union,
    infinitesimal_beltrami)
from degenlab.stretch.piecewise_map import PiecewiseVerticalMap, stretch_map
from degenlab.tests.utils import LabTest


class TestBandBeltrami(LabTest):
    def test_should_reject_coefficients_of_modulus_one(self):
        # When / Then
        with self.assertRaises(DomainError):
            BandBeltrami([(-1.0, 1.0, 1.0)], 2.0)

    def test_should_reject_overlapping_bands(self):
        # When / Then
        with self.assertRaises(ContractViolation):
            BandBeltrami([(-1.0, 0.5, 0.1), (0.0, 1.0, 0.2)], 2.0)

    def test_should_evaluate_band_values(self):
        # Given
        spec = BandBeltrami([(-1.0, 1.0, 0.25j)], 2.0)

        # When
        values = spec.value_at(np.array([-1.5, 0.0, 1.5]))

        # Then
        self.assertClose([0.0, 0.25j, 0.0], values)
        self.assertEqual(0.25j, spec.value_at(0.5))
        self.assertEqual([-1.0, 1.0], spec.interfaces())

    def test_max_dilatation(self):
        # Given
        spec = BandBeltrami([(-1.0, 1.0, -1.0 / 3.0)], 2.0)

        # When
        k = spec.max_dilatation()

        # Then
        self.assertClose(2.0, k)

    def test_beltrami_of_linear_map(self):
        # Given
        m = PiecewiseVerticalMap.linear(2.0, 3.0)

        # When
        spec = beltrami_of(m)

        # Then
        self.assertEqual(1, len(spec.bands))
        self.assertClose(-0.5, spec.value_at(0.0))

    def test_beltrami_of_stretch_should_vanish_outside_the_band(self):
        # Given
        m = stretch_map(30.0, 0.5, 1.0)

        # When
        spec = beltrami_of(m)

        # Then
        self.assertClose([0.0, -1.0 / 3.0, 0.0],
                         spec.value_at(np.array([-20.0, 0.0, 20.0])))
        self.assertClose(2.0, spec.max_dilatation())

    def test_infinitesimal_beltrami(self):
        # When
        spec = infinitesimal_beltrami(0.5, H=2.0)

        # Then
        self.assertClose(-1.0 / 3.0, spec.value_at(0.0))
        self.assertEqual([-1.5, 1.5], spec.interfaces())
        self.assertEqual(2.5, spec.halfheight)

    def test_difference_quotient_should_approach_infinitesimal_value(self):
        # Given
        t = 0.5
        expected = infinitesimal_beltrami(t).value_at(0.0)

        errors = []
        for h in (1e-2, 1e-3, 1e-4):
            # When
            quotient = difference_quotient(1.0, 0.5, t, h)

            # Then
            self.assertClose(-1.0 / (2 + 2 * t + h), quotient.value_at(0.0),
                             rtol=1e-8)
            errors.append(abs(quotient.value_at(0.0) - expected))
        self.assertTrue(errors[0] > errors[1] > errors[2])

    def test_difference_quotient_should_validate_step(self):
        # When / Then
        with self.assertRaises(DomainError):
            difference_quotient(1.0, 0.5, 0.9, 0.2)
        with self.assertRaises(DomainError):
            difference_quotient(1.0, 0.5, 0.5, 0.0)

    def test_conformal_conjugation_should_keep_moduli(self):
        # Given
        spec = BandBeltrami([(-1.0, 1.0, 0.4 + 0.1j)], 2.0)
        theta = 0.3

        # When
        conjugated = conformal_conjugation(spec, theta)

        # Then
        self.assertClose(spec.sup_modulus(), conjugated.sup_modulus())
        self.assertClose((0.4 + 0.1j) * cexp(-0.6j), conjugated.value_at(0.0))

    def test_should_deserialize_through_the_kind(self):
        # Given
        spec = BandBeltrami([(-1.0, 1.0, 0.5 - 0.25j)], 3.0)

        # When
        loaded = BeltramiSpec.from_dict(spec.to_dict())

        # Then
        self.assertIsInstance(loaded, BandBeltrami)
        self.assertEqual("bands", loaded.kind)
        self.assertEqual(spec.bands, loaded.bands)


class TestRegionBeltrami(LabTest):
    def test_region_should_store_area_in_log_domain(self):
        # When
        region = Region("tiny", -2000.0, 0.0, dilatation=1e300)

        # Then
        self.assertEqual(0.0, region.area)
        self.assertEqual(-2000.0, region.log_area)
        self.assertClose(2e-300, region.modulus_gap, rtol=1e-12)

    def test_region_with_area_should_validate(self):
        # When / Then
        with self.assertRaises(InvalidInputError):
            Region.with_area("r", 0.0, 0.5)

    def test_region_dilatation_from_value(self):
        # When
        region = Region.with_area("r", 2.0, 0.5j)

        # Then
        self.assertClose(3.0, region.dilatation)
        self.assertClose(log(2.0), region.log_area)
        self.assertClose(0.5, region.modulus_gap)

    def test_superlevel_area(self):
        # Given
        spec = RegionBeltrami([Region.with_area("a", 1.0, 0.5),
                               Region.with_area("b", 0.25, 0.95)],
                              background_area=2.0)

        # When
        small = spec.superlevel_area(0.1)
        large = spec.superlevel_area(0.6)

        # Then
        self.assertClose(0.25, small)
        self.assertClose(1.25, large)
        self.assertClose(3.25, spec.total_area())

    def test_should_reject_duplicated_labels(self):
        # When / Then
        with self.assertRaises(ContractViolation):
            RegionBeltrami([Region.with_area("a", 1.0, 0.5),
                            Region.with_area("a", 1.0, 0.1)])

    def test_disjoint_union(self):
        # Given
        first = RegionBeltrami([Region.with_area("a", 1.0, 0.5)])
        second = RegionBeltrami([Region.with_area("b", 1.0, 0.1)])

        # When
        union = disjoint_union(first, second, background_area=1.0)

        # Then
        self.assertEqual(["a", "b"], [r.label for r in union.regions])
        self.assertClose(3.0, union.total_area())

    def test_disjoint_union_should_reject_mixed_representations(self):
        # Given
        first = RegionBeltrami([Region.with_area("a", 1.0, 0.5)])
        second = BandBeltrami([(-1.0, 1.0, 0.1)], 2.0)

        # When / Then
        with self.assertRaises(ContractViolation):
            disjoint_union(first, second)

    def test_should_deserialize_through_the_kind(self):
        # Given
        spec = RegionBeltrami([Region("deep", -500.0, 0.0, dilatation=1e200)],
                              background_area=None)

        # When
        loaded = BeltramiSpec.from_dict(spec.to_dict())

        # Then
        self.assertIsInstance(loaded, RegionBeltrami)
        self.assertEqual(1e200, loaded.max_dilatation())
        self.assertIsNone(loaded.background_area)
