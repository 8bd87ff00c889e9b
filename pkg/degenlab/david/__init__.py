from degenlab.david.budget import (
    DavidBudget, assemble_mu, l1_tail, select_budget, stage_dilatation,
    stage_modulus)
from degenlab.david.certificate import (
    DavidCertificate, certify, exp_integrability, log_exp_integrability)
from degenlab.david.sequences import (
    GeometricSequence, PowerSequence, Sequence)
