from degenlab.bounds.ledger import (
    ConvergenceLedger, base_series_closed_form, base_series_partial_sums,
    literal_series_cap, mcmullen_step, radius_sequence, series_cap,
    series_sum, turnover_index)
from degenlab.bounds.wolpert import (
    geodesic_decay, wolpert_contradiction, wolpert_interval)
