from __future__ import division, unicode_literals

from math import exp, pi

from degenlab.david.budget import (
    DavidBudget, assemble_mu, l1_tail, select_budget, stage_dilatation,
    stage_modulus)
from degenlab.david.sequences import GeometricSequence, PowerSequence
from degenlab.exceptions import ContractViolation, InvalidInputError
from degenlab.tests.utils import LabTest


class TestBudget(LabTest):
    def setUp(self):
        self.p = GeometricSequence(1.0, 0.25)
        self.area = GeometricSequence(1.0, 0.5)

    def test_stage_modulus_should_match_dilatation(self):
        for j in range(8):
            # When
            k = stage_modulus(j)

            # Then
            self.assertClose(stage_dilatation(j), (1 + k) / (1 - k),
                             rtol=1e-12)

    def test_should_select_smallest_admissible_indices(self):
        # When
        budget = select_budget(self.p, self.area, 4)

        # Then
        self.assertListEqual([3, 8, 16, 30], budget.selection)
        self.assertTrue(budget.is_valid())

    def test_selection_should_be_minimal(self):
        # Given
        budget = select_budget(self.p, self.area, 5)

        for j, m in enumerate(budget.selection):
            # When
            previous = budget.selection[j - 1] if j else -1
            mass_before = self.area(m - 1) * exp(2 * stage_dilatation(j))

            # Then
            self.assertLess(budget.stage_mass(j), self.p(j))
            if m - 1 > previous:
                self.assertGreaterEqual(mass_before, self.p(j))

    def test_should_handle_overflowing_stages(self):
        # When
        budget = select_budget(self.p, self.area, 12)

        # Then
        self.assertTrue(budget.is_valid())
        self.assertEqual(12, budget.num_stages)
        self.assertEqual(0.0, self.area(budget.selection[11]))
        self.assertLess(budget.stage_mass(11), self.p(11))
        self.assertGreater(budget.log_margin(11), 0)

    def test_should_reject_non_summable_budget(self):
        # When / Then
        with self.assertRaises(ContractViolation):
            select_budget(PowerSequence(exponent=1.0), self.area, 3)

    def test_should_reject_areas_not_fitting_in_the_disk(self):
        # When / Then
        with self.assertRaises(ContractViolation):
            select_budget(self.p, GeometricSequence(2.0, 0.5), 3)

    def test_should_reject_non_vanishing_areas(self):
        # When / Then
        with self.assertRaises(ContractViolation):
            select_budget(self.p, GeometricSequence(0.1, 1.0), 3)

    def test_budget_should_require_increasing_selection(self):
        # When / Then
        with self.assertRaises(ContractViolation):
            DavidBudget(self.p, self.area, [3, 3])

    def test_assemble_mu(self):
        # Given
        budget = select_budget(self.p, self.area, 4)

        # When
        mu = assemble_mu(budget)

        # Then
        self.assertListEqual([3, 8, 16, 30], [r.label for r in mu.regions])
        self.assertClose([0.0, -1.0 / 3.0, -0.6, -7.0 / 9.0],
                         [r.value.real for r in mu.regions], atol=1e-15)
        self.assertClose([1.0, 2.0, 4.0, 8.0],
                         [r.dilatation for r in mu.regions])
        used = 2.0 ** -3 + 2.0 ** -8 + 2.0 ** -16 + 2.0 ** -30
        self.assertClose(pi - used, mu.background_area, rtol=1e-14)
        self.assertClose(pi, mu.total_area(), rtol=1e-14)

    def test_assemble_mu_should_include_last_stage(self):
        # Given
        budget = select_budget(self.p, self.area, 21)

        # When
        mu = assemble_mu(budget, 20)
        partial = assemble_mu(budget, 2)

        # Then
        self.assertEqual(21, len(mu.regions))
        self.assertClose((2.0 ** 20 - 1) / (2.0 ** 20 + 1), mu.sup_modulus(),
                         rtol=1e-14)
        self.assertClose(2.0 ** 20, mu.max_dilatation())
        self.assertListEqual([3, 8, 16], [r.label for r in partial.regions])
        self.assertClose(0.6, partial.sup_modulus(), rtol=1e-14)

    def test_tighter_budget_should_select_later_indices(self):
        # Given
        tight_p = GeometricSequence(0.5, 0.125)

        # When
        loose = select_budget(self.p, self.area, 8)
        tight = select_budget(tight_p, self.area, 8)

        # Then
        self.assertTrue(all(tight_p(j) <= self.p(j) for j in range(8)))
        for m_loose, m_tight in zip(loose.selection, tight.selection):
            self.assertGreaterEqual(m_tight, m_loose)
        self.assertGreater(tight.selection[-1], loose.selection[-1])
        self.assertTrue(tight.is_valid())

    def test_assemble_mu_should_check_stage_count(self):
        # Given
        budget = select_budget(self.p, self.area, 2)

        # When / Then
        with self.assertRaises(InvalidInputError):
            assemble_mu(budget, 2)
        with self.assertRaises(InvalidInputError):
            assemble_mu(select_budget(self.p, self.area, 0))

    def test_l1_tail(self):
        # Given
        budget = select_budget(self.p, self.area, 4)

        # When
        tail = l1_tail(budget, 2)

        # Then
        self.assertClose(1.0 / 12.0, tail)

    def test_budget_should_serialize(self):
        # Given
        budget = select_budget(self.p, self.area, 3)

        # When
        loaded = DavidBudget.from_dict(budget.to_dict())

        # Then
        self.assertListEqual(budget.selection, loaded.selection)
        self.assertDictEqual(budget.to_dict(), loaded.to_dict())
