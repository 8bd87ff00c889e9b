from __future__ import division, unicode_literals

from math import log

import numpy as np

from degenlab.bounds.ledger import (
    base_series_closed_form, base_series_partial_sums, literal_series_cap,
    mcmullen_step, radius_sequence, series_cap, series_sum, turnover_index)
from degenlab.constants import RADIUS_RATIO
from degenlab.exceptions import DomainError
from degenlab.tests.utils import LabTest


class TestLedger(LabTest):
    def test_mcmullen_step(self):
        # When
        steps = [mcmullen_step(0.0), mcmullen_step(0.5, C=2.0)]

        # Then
        expected = 2.0 * (0.5 * log(2.0)) ** 2 * log(2.0) / 2.0
        self.assertClose([0.0, expected], steps)

    def test_mcmullen_step_should_validate_radius(self):
        # When / Then
        with self.assertRaises(DomainError):
            mcmullen_step(-0.1)
        with self.assertRaises(DomainError):
            mcmullen_step(1.0)

    def test_radius_sequence(self):
        # When
        radii = radius_sequence(0.5, 0.5, 3)

        # Then
        self.assertClose([0.5, 0.25, 0.125, 0.0625], radii)
        with self.assertRaises(DomainError):
            radius_sequence(0.6, 0.5, 3)
        with self.assertRaises(DomainError):
            radius_sequence(0.5, 1.0, 3)

    def test_base_series_partial_sums_should_reach_closed_form(self):
        # When
        partial_sums = base_series_partial_sums(0.5, 200)

        # Then
        self.assertClose(6.0, base_series_closed_form(0.5))
        self.assertClose(6.0, partial_sums[-1], rtol=1e-14)
        self.assertTrue(np.all(np.diff(partial_sums) > 0))

    def test_turnover_index(self):
        # Given
        radii = radius_sequence(0.5, RADIUS_RATIO, 20)

        # When
        turnover = turnover_index(radii)

        # Then
        self.assertEqual(6, turnover)
        self.assertIsNone(turnover_index([0.5, 0.45]))

    def test_step_bounds_should_decrease_after_turnover(self):
        # When
        ledger = series_sum(J=100)

        # Then
        tail = ledger.step_bounds[ledger.turnover:]
        self.assertTrue(np.all(np.diff(tail) < 0))

    def test_partial_sum_should_reach_cap(self):
        # When
        ledger = series_sum(C=1.0, L0=0.5, ratio=RADIUS_RATIO, J=500)

        # Then
        self.assertLessEqual(ledger.partial_sum, ledger.cap * (1 + 1e-12))
        self.assertClose(ledger.cap, ledger.partial_sum, rtol=1e-10)
        self.assertTrue(np.all(np.diff(ledger.partial_sums) >= 0))

    def test_series_cap_should_match_brute_force_sum(self):
        # Given
        C, L0, ratio = 3.0, 0.25, 0.5

        # When
        cap = series_cap(C, L0, ratio)

        # Then
        brute_force = sum(mcmullen_step(L, C)
                          for L in radius_sequence(L0, ratio, 200))
        self.assertClose(brute_force, cap, rtol=1e-12)

    def test_series_cap_with_zero_ratio(self):
        # When
        cap = series_cap(1.0, 0.5, 0.0)

        # Then
        self.assertClose(mcmullen_step(0.5), cap)
        self.assertEqual(0.0, literal_series_cap(1.0, 0.0))

    def test_literal_cap_should_drop_the_initial_radius(self):
        # Given
        ratio = 0.5

        # When
        literal = literal_series_cap(2.0, ratio)

        # Then
        expected = 2.0 * log(2.0) / 2.0 * log(2.0) ** 2 \
                   * base_series_closed_form(0.25)
        self.assertClose(expected, literal)

    def test_ledger_rows_and_dict(self):
        # Given
        ledger = series_sum(J=10)

        # When
        rows = ledger.rows()
        ledger_dict = ledger.to_dict()

        # Then
        self.assertEqual(11, len(rows))
        self.assertEqual(["j", "radius", "step_bound", "partial_sum"],
                         ledger.header)
        self.assertEqual([0, 0.5, mcmullen_step(0.5), mcmullen_step(0.5)],
                         rows[0])
        self.assertEqual(10, ledger_dict["J"])
        self.assertEqual(6, ledger_dict["turnover_index"])
