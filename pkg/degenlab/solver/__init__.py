from degenlab.solver.beltrami_solver import (
    GridMap, Normalization, modulus_of_continuity_bound, solve)
from degenlab.solver.experiment import (
    ConvergenceTable, convergence_experiment, indicator_k_l1_norm)
from degenlab.solver.grid import (
    GridBeltrami, GridField, GridGeometry, sample_bands, sample_function)
