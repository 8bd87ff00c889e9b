from degenlab.annulus.pudding import (
    AggregateCheck, AnnulusPair, LaurentSeries, PuddingCheck, aggregate_cq,
    annulus_l1_norm, collar_aggregate_bound, laurent_l1_norm,
    pudding_constant, verify_pudding)
