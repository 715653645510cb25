import logging
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
from os import PathLike
from typing import Dict, List, Optional, Union

import numpy as np
import pandas as pd

from squintpy._config import get_option
from squintpy.beamform.wbbg import WbbgOptions, WbbgSolution, wbbg_optimize
from squintpy.core.architecture import PerfCurve
from squintpy.core.scenario import Scenario, validate_scenario, with_fractional_bandwidth
from squintpy.types import Array
from .results import PerformanceResult
from .spectral import (
    sum_se_full_ttd, sum_se_nbbg, sum_se_sparse_lower, sum_se_sparse_upper, sum_se_wbbg
)

__all__ = ["SWEEP_COLUMNS", "SweepOptions", "evaluate_scenario", "sweep_fractional_bandwidth",
           "workers_from_env", "write_csv"]

logger = logging.getLogger(__name__)

SWEEP_COLUMNS = ['bf', 'architecture', 'sum_se_bps_hz', 'gap_bps_hz', 'normalized_gap',
                 'wbbg_min_gain', 'seed']


@dataclass(frozen=True)
class SweepOptions:
    """
    Parameters
    ----------
    wbbg: WbbgOptions, optional
        Optimizer settings. The seed is always taken from the scenario

    workers: int, optional
        Threads evaluating bandwidth points. Defaults to the 'SWEEP.WORKERS' option
    """
    wbbg: Optional[WbbgOptions] = None
    workers: Optional[int] = None


def evaluate_scenario(scenario: Scenario,
                      solution: Optional[WbbgSolution] = None,
                      opts: Optional[WbbgOptions] = None) -> Dict[PerfCurve, PerformanceResult]:
    """
    Spectral efficiency of all five curves for one scenario.

    Parameters
    ----------
    scenario: Scenario
        Validated scenario

    solution: WbbgSolution, optional
        Wideband beam gain weights for this scenario. Optimized with the scenario seed when absent

    opts: WbbgOptions, optional
        Optimizer settings used when ``solution`` is absent

    Returns
    -------
    dict
        Result per curve, in curve order
    """
    if solution is None:
        opts = replace(opts or WbbgOptions(), seed=scenario.seed)
        solution = wbbg_optimize(scenario.array, scenario.grid, scenario.target.angle_rad, opts)

    return {
        PerfCurve.FullTTD_NBBG: sum_se_full_ttd(scenario),
        PerfCurve.NonTTD_NBBG: sum_se_nbbg(scenario),
        PerfCurve.NonTTD_WBBG: sum_se_wbbg(scenario, solution),
        PerfCurve.SparseTTD_lower: sum_se_sparse_lower(scenario, solution),
        PerfCurve.SparseTTD_upper: sum_se_sparse_upper(scenario),
    }


def sweep_fractional_bandwidth(base: Scenario,
                               bf_grid: Array,
                               opts: Optional[SweepOptions] = None) -> pd.DataFrame:
    """
    Evaluates every architecture over a grid of fractional bandwidths.

    Each bandwidth point is an independent task with its own WBBG optimization seeded by the
    scenario, so the table does not depend on the number of workers or on the order of the grid.

    Parameters
    ----------
    base: Scenario
        Scenario whose bandwidth is replaced by ``bf * f0`` at every point

    bf_grid: array_like
        Fractional bandwidths B / f0, each in [0, 2)

    opts: SweepOptions, optional
        Optimizer settings and worker count

    Returns
    -------
    DataFrame
        One row per (bf, architecture) with the columns in ``SWEEP_COLUMNS``, sorted by bf then
        curve order
    """
    bf_grid = np.atleast_1d(np.asarray(bf_grid, dtype=float))
    if bf_grid.size == 0:
        raise ValueError("empty grid")
    if np.any((bf_grid < 0) | (bf_grid >= 2)) or not np.all(np.isfinite(bf_grid)):
        raise ValueError("fractional bandwidths must lie in [0, 2)")

    opts = opts or SweepOptions()
    workers = opts.workers or get_option('SWEEP.WORKERS')
    wbbg = replace(opts.wbbg or WbbgOptions(), seed=base.seed)

    def task(bf: float) -> List[dict]:
        return _rows(validate_scenario(with_fractional_bandwidth(base, bf)), bf, wbbg)

    logger.info("sweeping %d bandwidth points with %d worker(s)", bf_grid.size, workers)
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as executor:
            chunks = list(executor.map(task, bf_grid))
    else:
        chunks = [task(bf) for bf in bf_grid]

    table = pd.DataFrame([row for chunk in chunks for row in chunk])
    table['_rank'] = table['architecture'].map(lambda a: PerfCurve(a).rank)
    table = table.sort_values(['bf', '_rank'], kind='mergesort').drop(columns='_rank')
    return table.reset_index(drop=True)[SWEEP_COLUMNS]


def write_csv(table: pd.DataFrame, path: Union[str, PathLike]):
    """
    Writes a result table as UTF-8 CSV with full precision floats. Missing values are left empty.
    """
    table.to_csv(path, index=False, float_format='%.17e', na_rep='', encoding='utf-8')


def _rows(scenario: Scenario, bf: float, opts: WbbgOptions) -> List[dict]:
    solution = wbbg_optimize(scenario.array, scenario.grid, scenario.target.angle_rad, opts)
    rows = []
    for curve, result in evaluate_scenario(scenario, solution).items():
        rows.append({
            'bf': float(bf),
            'architecture': curve.value,
            'sum_se_bps_hz': result.sum_se,
            'gap_bps_hz': result.gap_vs_full_ttd,
            'normalized_gap': result.normalized_gap,
            'wbbg_min_gain': solution.min_gain if curve is PerfCurve.NonTTD_WBBG else np.nan,
            'seed': int(scenario.seed),
        })
    logger.debug("bf=%.6g done, WBBG min gain %.6g", bf, solution.min_gain)
    return rows


def workers_from_env(default: Optional[int] = None) -> Optional[int]:
    """Worker count from the SQUINTPY_WORKERS environment variable, if set"""
    value = os.environ.get('SQUINTPY_WORKERS')
    if not value:
        return default
    workers = int(value)
    if workers < 1:
        raise ValueError(f"SQUINTPY_WORKERS must be a positive integer, got {value}")
    return workers
