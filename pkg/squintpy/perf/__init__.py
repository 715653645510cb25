from .gap import PerformanceGap, log_ratio_gap, performance_gap
from .results import PerformanceResult
from .spectral import (
    narrowband_gains, sum_se_full_ttd, sum_se_nbbg, sum_se_sparse_lower, sum_se_sparse_upper,
    sum_se_wbbg
)
from .sweep import (
    SWEEP_COLUMNS, SweepOptions, evaluate_scenario, sweep_fractional_bandwidth, workers_from_env,
    write_csv
)
