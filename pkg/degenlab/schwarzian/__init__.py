from degenlab.schwarzian.bers_norm import (
    ExteriorGrid, NormEstimate, bers_norm_exterior)
from degenlab.schwarzian.counterexample import (
    CounterexampleTable, counterexample_form, counterexample_scan,
    radial_factor, radial_factor_derivative, radial_factor_maximum)
from degenlab.schwarzian.kernel import (
    KernelResult, bers_derivative_kernel, pushed_derivative_kernel)
from degenlab.schwarzian.maps import (
    AnalyticMap, ComposedMap, CounterexampleMap, LambdaMap, MobiusMap)
from degenlab.schwarzian.schwarzian import (
    QuadraticForm, schwarzian, schwarzian_closed, schwarzian_fd)
