from degenlab.checks.suite import CheckSuite
from degenlab.checks.cylinder import CylinderSuite
from degenlab.checks.stretch import StretchSuite
from degenlab.checks.david import DavidSuite
from degenlab.checks.bounds import BoundsSuite
from degenlab.checks.solver import SolverSuite
from degenlab.checks.schwarzian import SchwarzianSuite
from degenlab.checks.pudding import PuddingSuite
