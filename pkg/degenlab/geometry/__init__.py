from degenlab.geometry.cylinder import (
    CylinderSpec, InjRadiusReport, collar_length_for_width, collar_threshold,
    collar_width, collar_width_naive, construction_pair_ratio, core_length,
    horizontal_curve_length, inj_radius_bounds, metric_density)
