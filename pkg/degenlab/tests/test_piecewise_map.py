from __future__ import division, unicode_literals

import numpy as np

from degenlab.exceptions import ContractViolation, DomainError, \
    InvalidInputError
from degenlab.stretch.piecewise_map import (
    PiecewiseVerticalMap, compose, max_dilatation, stretch_map)
from degenlab.tests.utils import LabTest


class TestPiecewiseVerticalMap(LabTest):
    def test_stretch_map_should_scale_band_and_translate_outside(self):
        # Given
        m = stretch_map(2.0, 0.5, 1.0)
        ys = np.array([-2.0, -1.5, -1.0, 0.0, 0.5, 1.0, 1.5, 2.0])

        # When
        images = m(ys)

        # Then
        expected = [-3.0, -2.5, -2.0, 0.0, 1.0, 2.0, 2.5, 3.0]
        self.assertClose(expected, images)
        self.assertEqual(3.0, m.target_halfheight)
        self.assertEqual(3, m.num_pieces)

    def test_stretch_map_at_time_zero_should_be_identity(self):
        # When
        m = stretch_map(5.0, 0.5, 0.0)

        # Then
        self.assertTrue(m.allclose(PiecewiseVerticalMap.identity(5.0)))

    def test_stretch_map_should_validate_parameters(self):
        # When / Then
        with self.assertRaises(DomainError):
            stretch_map(-1.0, 0.5, 0.5)
        with self.assertRaises(DomainError):
            stretch_map(1.0, 0.0, 0.5)
        with self.assertRaises(DomainError):
            stretch_map(1.0, 0.5, 1.5)

    def test_should_reject_discontinuous_maps(self):
        # When / Then
        with self.assertRaises(InvalidInputError):
            PiecewiseVerticalMap([0.0], [1.0, 2.0], [0.0, 1.0], 1.0, 2.0)

    def test_should_reject_maps_missing_the_target_interval(self):
        # When / Then
        with self.assertRaises(InvalidInputError):
            PiecewiseVerticalMap([], [2.0], [0.0], 1.0, 1.0)

    def test_should_reject_non_positive_slopes(self):
        # When / Then
        with self.assertRaises(InvalidInputError):
            PiecewiseVerticalMap([], [-1.0], [0.0], 1.0, 1.0)

    def test_should_merge_pieces_with_equal_slopes(self):
        # When
        m = PiecewiseVerticalMap([-0.5, 0.5], [1.0, 1.0, 1.0],
                                 [0.0, 0.0, 0.0], 1.0, 1.0)

        # Then
        self.assertEqual(1, m.num_pieces)
        self.assertEqual(0, len(m.breakpoints))

    def test_should_raise_outside_the_domain(self):
        # Given
        m = stretch_map(1.0, 0.5, 0.5)

        # When / Then
        with self.assertRaises(DomainError):
            m(1.01)

    def test_inverse_should_undo_the_map(self):
        # Given
        m = stretch_map(3.0, 0.5, 0.7)
        ys = np.linspace(-3.0, 3.0, 61)

        # When
        recovered = m.inverse()(m(ys))

        # Then
        self.assertClose(ys, recovered, atol=1e-12)
        self.assertEqual(3.0, m.inverse().target_halfheight)

    def test_compose_with_inverse_should_give_identity(self):
        # Given
        m = stretch_map(3.0, 0.5, 0.7)

        # When
        identity = compose(m, m.inverse())

        # Then
        self.assertTrue(identity.allclose(
            PiecewiseVerticalMap.identity(m.target_halfheight)))

    def test_compose_should_agree_with_pointwise_composition(self):
        # Given
        inner = stretch_map(1.0, 0.5, 0.5)
        outer = stretch_map(1.25, 0.5, 1.0)
        ys = np.linspace(-1.0, 1.0, 41)

        # When
        composed = compose(outer, inner)

        # Then
        self.assertClose(outer(inner(ys)), composed(ys), atol=1e-12)
        self.assertTrue(composed.is_odd())

    def test_compose_should_raise_on_mismatched_heights(self):
        # Given
        m = stretch_map(1.0, 0.5, 1.0)

        # When / Then
        with self.assertRaises(ContractViolation):
            compose(m, m)

    def test_max_dilatation(self):
        # Given
        m = stretch_map(1.0, 0.5, 1.0)

        # When
        k_inner = max_dilatation(m)
        k_inverse = max_dilatation(m.inverse())

        # Then
        self.assertEqual(2.0, k_inner)
        self.assertEqual(2.0, k_inverse)

    def test_compose_should_be_associative(self):
        # Given
        h = stretch_map(1.0, 0.5, 0.5)
        g = stretch_map(1.25, 0.5, 1.0)
        f = stretch_map(1.875, 0.25, 0.4)
        ys = np.linspace(-1.0, 1.0, 57)

        # When
        left = compose(f, compose(g, h))
        right = compose(compose(f, g), h)

        # Then
        self.assertTrue(left.allclose(right))
        self.assertClose(f(g(h(ys))), left(ys), atol=1e-12)

    def test_dilatation_of_composition_should_be_submultiplicative(self):
        # Given
        m = stretch_map(1.0, 0.5, 1.0)
        shifted = stretch_map(1.5, 0.25, 0.5)

        # When
        k_back = max_dilatation(compose(m.inverse(), m))
        k_shifted = max_dilatation(compose(shifted, m))

        # Then
        self.assertEqual(1.0, k_back)
        self.assertLessEqual(k_back, max_dilatation(m.inverse())
                             * max_dilatation(m))
        self.assertLessEqual(k_shifted,
                             max_dilatation(shifted) * max_dilatation(m))

    def test_dilatation_should_multiply_along_nested_stretches(self):
        # Given
        H = 2.0
        current = PiecewiseVerticalMap.identity(H)

        for stage in range(1, 7):
            # When
            outer = stretch_map(1.5 ** (stage - 1) * H, 0.5, 1.0)
            expected = max_dilatation(outer) * max_dilatation(current)
            current = compose(outer, current)

            # Then
            self.assertEqual(expected, max_dilatation(current))
            self.assertEqual(2.0 ** stage, max_dilatation(current))

    def test_should_serialize(self):
        # Given
        m = stretch_map(1.0, 0.5, 1.0)

        # When
        m_dict = m.to_dict()

        # Then
        expected_dict = {
            "breakpoints": [-0.5, 0.5],
            "slopes": [1.0, 2.0, 1.0],
            "offsets": [-0.5, 0.0, 0.5],
            "source_halfheight": 1.0,
            "target_halfheight": 1.5
        }
        self.assertDictEqual(expected_dict, m_dict)
        self.assertTrue(PiecewiseVerticalMap.from_dict(m_dict).allclose(m))
