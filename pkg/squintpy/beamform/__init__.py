from .oracle import exhaustive_phase_search
from .sparse import sparse_ttd_bounds
from .wbbg import WbbgOptimizer, WbbgOptions, WbbgSolution, wbbg_optimize
from .weights import (
    DelayWeights, PhaseOnlyWeights, full_ttd_delays, mrt_phases, quantize_delays, quantize_phases,
    wrap_phase
)
