from degenlab.stretch.beltrami import (
    BandBeltrami, BeltramiSpec, Region, RegionBeltrami, beltrami_of,
    conformal_conjugation, difference_quotient, disjoint_union,
    infinitesimal_beltrami)
from degenlab.stretch.piecewise_map import (
    PiecewiseVerticalMap, compose, max_dilatation, stretch_map)
from degenlab.stretch.schedule import (
    ScheduleTime, iterate_schedule, stage_halfheight, standard_deformation)
