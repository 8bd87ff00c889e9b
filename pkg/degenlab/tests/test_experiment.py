from __future__ import division, unicode_literals

from math import pi

from mock import patch

from degenlab.exceptions import InvalidInputError
from degenlab.solver.experiment import (
    ConvergenceTable, convergence_experiment, indicator_coefficient,
    indicator_k_l1_norm)
from degenlab.tests.utils import LabTest


class TestConvergenceExperiment(LabTest):
    def test_indicator_k_l1_norm(self):
        # When
        norms = [indicator_k_l1_norm(n) for n in (1, 2, 100)]

        # Then
        self.assertClose([pi, 1.5 * pi, pi * (199 + 9999) / 10000.0], norms)
        with self.assertRaises(InvalidInputError):
            indicator_k_l1_norm(0)

    def test_indicator_coefficient(self):
        # Given
        coefficient = indicator_coefficient(4, 1.0 + 0j)

        # When
        values = coefficient([1.0 + 0.2j, 1.3 + 0j])

        # Then
        self.assertClose([0.75, 0.0], values)

    def test_table_summaries(self):
        # Given
        table = ConvergenceTable([(2, 0.4, 0, 0, 0), (4, 0.2, 0, 0, 0),
                                  (8, 0.1, 0, 0, 0)])

        # When
        table_dict = table.to_dict()

        # Then
        self.assertTrue(table.strictly_decreasing)
        self.assertClose(0.25, table.final_ratio)
        self.assertEqual(3, len(table_dict["rows"]))
        self.assertEqual(0.2, table_dict["rows"][1]["sup_distance"])

    def test_final_ratio_should_be_none_when_first_distance_vanishes(self):
        # Given
        table = ConvergenceTable([(1, 0.0, 0, 0, 0), (2, 0.3, 0, 0, 0)])

        # When
        table_dict = table.to_dict()

        # Then
        self.assertIsNone(table.final_ratio)
        self.assertIsNone(table_dict["final_ratio"])
        self.assertFalse(table.strictly_decreasing)

    def test_should_accept_first_stage(self):
        # When
        table = convergence_experiment([1, 2], grid_size=16, supersample=2)

        # Then
        self.assertEqual(0.0, table.sup_distances[0])
        self.assertGreater(table.sup_distances[1], 0.0)
        self.assertIsNone(table.final_ratio)

    def test_distance_to_identity_should_shrink_with_the_disk(self):
        # When
        table = convergence_experiment([2, 4, 8], grid_size=64,
                                       supersample=4)

        # Then
        self.assertTrue(table.strictly_decreasing)
        self.assertLess(table.final_ratio, 1.0)
        self.assertListEqual([2, 4, 8], [row[0] for row in table.rows()])

    def test_should_solve_with_identity_normalization(self):
        # Given
        solutions = []

        def fake_solve(mu, normalization):
            solutions.append(normalization.description)

            class FakeMap(object):
                residual_norm = 0.0

                @staticmethod
                def sup_distance_to_identity():
                    return 1.0 / len(solutions)

            return FakeMap()

        # When
        with patch("degenlab.solver.experiment.solve", side_effect=fake_solve):
            table = convergence_experiment([2, 4], grid_size=16,
                                           supersample=1)

        # Then
        self.assertListEqual(["identity", "identity"], solutions)
        self.assertClose([1.0, 0.5], table.sup_distances)

    def test_should_require_several_stages(self):
        # When / Then
        with self.assertRaises(InvalidInputError):
            convergence_experiment([4])
