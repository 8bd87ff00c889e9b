from __future__ import unicode_literals

from degenlab.checks import CheckSuite
from degenlab.common.registrable import Registrable
from degenlab.exceptions import AlreadyRegisteredError, NotRegisteredError
from degenlab.stretch.beltrami import BandBeltrami, BeltramiSpec
from degenlab.tests.utils import LabTest


class TestRegistrable(LabTest):
    def test_registries_should_be_separate_per_base(self):
        # Given
        class Estimator(Registrable):
            pass

        class Integrator(Registrable):
            pass

        @Estimator.register("midpoint")
        class MidpointEstimator(Estimator):
            pass

        @Integrator.register("midpoint")
        class MidpointIntegrator(Integrator):
            pass

        # When
        estimator_type = Estimator.by_name("midpoint")
        integrator_type = Integrator.by_name("midpoint")

        # Then
        self.assertIs(MidpointEstimator, estimator_type)
        self.assertIs(MidpointIntegrator, integrator_type)
        self.assertEqual("midpoint",
                         Estimator.registered_name(MidpointEstimator))

    def test_should_keep_registration_order(self):
        # Given
        class Estimator(Registrable):
            pass

        for name in ("zeta", "alpha", "mu"):
            Estimator.register(name)(type(str(name), (Estimator,), {}))

        # When
        available = Estimator.list_available()

        # Then
        self.assertListEqual(["zeta", "alpha", "mu"], available)

    def test_unknown_names_should_list_alternatives(self):
        # Given
        class Estimator(Registrable):
            pass

        @Estimator.register("ring")
        class RingEstimator(Estimator):
            pass

        class LooseEstimator(Estimator):
            pass

        # When / Then
        with self.assertRaises(NotRegisteredError) as cm:
            Estimator.by_name("stencil")
        self.assertIn("Available: ring", str(cm.exception))
        with self.assertRaises(NotRegisteredError):
            Estimator.registered_name(LooseEstimator)

    def test_duplicated_names_need_override(self):
        # Given
        class Estimator(Registrable):
            pass

        @Estimator.register("ring")
        class RingEstimator(Estimator):
            pass

        # When / Then
        with self.assertRaises(AlreadyRegisteredError):
            Estimator.register("ring")(type(str("Other"), (Estimator,), {}))

        @Estimator.register("ring", override=True)
        class FinerRingEstimator(Estimator):
            pass

        self.assertIs(FinerRingEstimator, Estimator.by_name("ring"))

    def test_library_registries(self):
        # When
        suites = CheckSuite.list_available()
        kinds = BeltramiSpec.list_available()

        # Then
        self.assertListEqual(["cyl", "stretch", "david", "bounds", "solve",
                              "schwarzian", "pudding"], suites)
        self.assertIn("bands", kinds)
        self.assertIs(BandBeltrami, BeltramiSpec.by_name("bands"))
