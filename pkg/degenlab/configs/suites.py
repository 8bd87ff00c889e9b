from __future__ import division, unicode_literals

from degenlab.common.from_dict import FromDict
from degenlab.configs.config import SuiteConfig
from degenlab.configs.validation import (
    check_grid_size, check_non_empty, check_positive)
from degenlab.constants import RADIUS_RATIO
from degenlab.exceptions import InvalidInputError


class CylinderSuiteConfig(FromDict, SuiteConfig):
    """Configuration of the hyperbolic cylinder checks

    Args:
        H (float): half-height of the cylinder, 30 by default which exceeds
            the threshold ``2 sqrt(2) pi^2``
        a (float): band fraction
        samples (int): number of uniform time samples in [0, 1]
        collar_grid (int): number of geometric length samples for the
            collar comparison
        collar_min, collar_max (float): range of the collar comparison
        naive_dps (int): digits used for the literal collar formula
        tolerance (float): agreement required between the collar formulas
            and on the construction-pair ratio
        threshold_rtol (float): relative bracket for the collar threshold
    """
    suite_name = "cyl"

    def __init__(self, H=30.0, a=0.5, samples=1001, collar_grid=1000,
                 collar_min=1e-6, collar_max=10.0, naive_dps=50,
                 tolerance=1e-12, threshold_rtol=1e-3):
        self.H = check_positive("H", H)
        self.a = a
        if int(samples) != samples or samples < 2:
            raise InvalidInputError("samples must be an integer >= 2, got %r"
                                    % samples)
        self.samples = int(samples)
        self.collar_grid = int(check_positive("collar_grid", collar_grid))
        self.collar_min = check_positive("collar_min", collar_min)
        if not collar_max > collar_min:
            raise InvalidInputError("Empty collar range [%r, %r]"
                                    % (collar_min, collar_max))
        self.collar_max = collar_max
        self.naive_dps = int(check_positive("naive_dps", naive_dps))
        self.tolerance = check_positive("tolerance", tolerance)
        self.threshold_rtol = check_positive("threshold_rtol", threshold_rtol)

    def to_dict(self):
        return {
            "H": self.H,
            "a": self.a,
            "samples": self.samples,
            "collar_grid": self.collar_grid,
            "collar_min": self.collar_min,
            "collar_max": self.collar_max,
            "naive_dps": self.naive_dps,
            "tolerance": self.tolerance,
            "threshold_rtol": self.threshold_rtol
        }


class StretchSuiteConfig(FromDict, SuiteConfig):
    """Configuration of the stretch deformation checks"""
    suite_name = "stretch"

    def __init__(self, heights=(1.0, 30.0), t=1.0, max_stage=8,
                 fd_step=1e-3, samples=401, quotient_steps=(1e-2, 1e-3, 1e-4),
                 tolerance=1e-10):
        self.heights = [check_positive("heights", h)
                        for h in check_non_empty("heights", heights)]
        if not 0 <= t <= 1:
            raise InvalidInputError("t must lie in [0, 1], got %r" % t)
        self.t = t
        self.max_stage = int(check_positive("max_stage", max_stage))
        self.fd_step = check_positive("fd_step", fd_step)
        self.samples = int(check_positive("samples", samples))
        self.quotient_steps = sorted(
            (check_positive("quotient_steps", h)
             for h in check_non_empty("quotient_steps", quotient_steps)),
            reverse=True)
        self.tolerance = check_positive("tolerance", tolerance)

    def to_dict(self):
        return {
            "heights": list(self.heights),
            "t": self.t,
            "max_stage": self.max_stage,
            "fd_step": self.fd_step,
            "samples": self.samples,
            "quotient_steps": list(self.quotient_steps),
            "tolerance": self.tolerance
        }


class DavidSuiteConfig(FromDict, SuiteConfig):
    """Configuration of the David budget checks

    Args:
        p (dict): serialized budget :class:`.Sequence`, ``4^-j`` by default
        area (dict): serialized area :class:`.Sequence`, ``2^-m`` by default
        stages (int): number of stages of the budget
        exponent (float): exponent p of the exponential integrability
        eps_grid (list): values of eps where the certificate is checked
    """
    suite_name = "david"

    def __init__(self, p=None, area=None, stages=7, exponent=2.0,
                 eps_grid=(0.05, 0.1, 0.2, 0.5, 1.0)):
        if p is None:
            p = {"kind": "geometric", "first": 1.0, "ratio": 0.25}
        if area is None:
            area = {"kind": "geometric", "first": 1.0, "ratio": 0.5}
        self.p = dict(p)
        self.area = dict(area)
        self.stages = int(check_positive("stages", stages))
        self.exponent = check_positive("exponent", exponent)
        eps_grid = check_non_empty("eps_grid", eps_grid)
        if any(not 0 < e <= 1 for e in eps_grid):
            raise InvalidInputError("eps values must lie in (0, 1], got %r"
                                    % eps_grid)
        self.eps_grid = sorted(eps_grid)

    def to_dict(self):
        return {
            "p": dict(self.p),
            "area": dict(self.area),
            "stages": self.stages,
            "exponent": self.exponent,
            "eps_grid": list(self.eps_grid)
        }


class BoundsSuiteConfig(FromDict, SuiteConfig):
    """Configuration of the convergence series and Wolpert checks

    Args:
        wolpert (list): ``(short, K, H)`` triples
    """
    suite_name = "bounds"

    def __init__(self, C=1.0, L0=0.5, ratio=RADIUS_RATIO, J=500, H=30.0,
                 wolpert=((0.5, 10.0, 30.0), (0.1, 2.0, 30.0),
                          (1.0, 1.5, 5.0), (0.05, 4.0, 100.0)),
                 tolerance=1e-6):
        self.C = check_positive("C", C)
        if not 0 < L0 <= 0.5:
            raise InvalidInputError("L0 must lie in (0, 1/2], got %r" % L0)
        self.L0 = L0
        if not 0 <= ratio < 1:
            raise InvalidInputError("ratio must lie in [0, 1), got %r"
                                    % ratio)
        self.ratio = ratio
        self.J = int(check_positive("J", J))
        self.H = check_positive("H", H)
        self.wolpert = [tuple(float(v) for v in triple)
                        for triple in check_non_empty("wolpert", wolpert)]
        if any(len(triple) != 3 for triple in self.wolpert):
            raise InvalidInputError("Wolpert entries are (short, K, H) "
                                    "triples")
        self.tolerance = check_positive("tolerance", tolerance)

    def to_dict(self):
        return {
            "C": self.C,
            "L0": self.L0,
            "ratio": self.ratio,
            "J": self.J,
            "H": self.H,
            "wolpert": [list(triple) for triple in self.wolpert],
            "tolerance": self.tolerance
        }


class SolverSuiteConfig(FromDict, SuiteConfig):
    """Configuration of the grid solver checks and of the
    convergence-to-identity experiment"""
    suite_name = "solve"

    def __init__(self, H=30.0, nx=128, ny=128, stages=(2, 4, 8, 16, 32),
                 experiment_grid=128, supersample=8, tolerance=1e-8,
                 identity_tolerance=1e-10):
        self.H = check_positive("H", H)
        self.nx = check_grid_size("nx", nx)
        self.ny = check_grid_size("ny", ny)
        self.stages = [int(check_positive("stages", n))
                       for n in check_non_empty("stages", stages)]
        if len(self.stages) < 2:
            raise InvalidInputError("At least two stages are needed")
        self.experiment_grid = check_grid_size("experiment_grid",
                                               experiment_grid)
        self.supersample = int(check_positive("supersample", supersample))
        self.tolerance = check_positive("tolerance", tolerance)
        self.identity_tolerance = check_positive("identity_tolerance",
                                                 identity_tolerance)

    def to_dict(self):
        return {
            "H": self.H,
            "nx": self.nx,
            "ny": self.ny,
            "stages": list(self.stages),
            "experiment_grid": self.experiment_grid,
            "supersample": self.supersample,
            "tolerance": self.tolerance,
            "identity_tolerance": self.identity_tolerance
        }


class SchwarzianSuiteConfig(FromDict, SuiteConfig):
    """Configuration of the Schwarzian, Bers norm and kernel checks"""
    suite_name = "schwarzian"

    def __init__(self, lambdas=(0.0, 0.3, 0.6, 0.9, 0.99), grid=400,
                 fd_lambdas=(0.1, 0.5, 0.9), fd_points=100, fd_step=0.1,
                 kernel_cells=2048, kernel_point=2.0, tolerance=1e-3,
                 fd_tolerance=1e-6, mobius_tolerance=1e-10):
        self.lambdas = check_non_empty("lambdas", lambdas)
        if any(not 0 <= lam < 1 for lam in self.lambdas):
            raise InvalidInputError("lambda values must lie in [0, 1), got "
                                    "%r" % self.lambdas)
        self.grid = check_grid_size("grid", grid)
        self.fd_lambdas = check_non_empty("fd_lambdas", fd_lambdas)
        self.fd_points = int(check_positive("fd_points", fd_points))
        self.fd_step = check_positive("fd_step", fd_step)
        self.kernel_cells = check_grid_size("kernel_cells", kernel_cells)
        if not abs(kernel_point) > 1:
            raise InvalidInputError("kernel_point must satisfy |z| > 1, got "
                                    "%r" % kernel_point)
        self.kernel_point = kernel_point
        self.tolerance = check_positive("tolerance", tolerance)
        self.fd_tolerance = check_positive("fd_tolerance", fd_tolerance)
        self.mobius_tolerance = check_positive("mobius_tolerance",
                                               mobius_tolerance)

    def to_dict(self):
        return {
            "lambdas": list(self.lambdas),
            "grid": self.grid,
            "fd_lambdas": list(self.fd_lambdas),
            "fd_points": self.fd_points,
            "fd_step": self.fd_step,
            "kernel_cells": self.kernel_cells,
            "kernel_point": self.kernel_point,
            "tolerance": self.tolerance,
            "fd_tolerance": self.fd_tolerance,
            "mobius_tolerance": self.mobius_tolerance
        }


class PuddingSuiteConfig(FromDict, SuiteConfig):
    """Configuration of the annulus L1 domination checks"""
    suite_name = "pudding"

    def __init__(self, r1=2.0, r2=3.0, R=4.0, min_degree=-5, max_degree=5,
                 random_series=50, collars=3, tolerance=1e-8):
        if not 1 < r1 < r2 < R:
            raise InvalidInputError("Radii must satisfy 1 < r1 < r2 < R, got "
                                    "%r, %r, %r" % (r1, r2, R))
        self.r1 = r1
        self.r2 = r2
        self.R = R
        if max_degree < min_degree:
            raise InvalidInputError("Empty degree range [%r, %r]"
                                    % (min_degree, max_degree))
        self.min_degree = int(min_degree)
        self.max_degree = int(max_degree)
        self.random_series = int(check_positive("random_series",
                                                random_series))
        self.collars = int(check_positive("collars", collars))
        self.tolerance = check_positive("tolerance", tolerance)

    def to_dict(self):
        return {
            "r1": self.r1,
            "r2": self.r2,
            "R": self.R,
            "min_degree": self.min_degree,
            "max_degree": self.max_degree,
            "random_series": self.random_series,
            "collars": self.collars,
            "tolerance": self.tolerance
        }
