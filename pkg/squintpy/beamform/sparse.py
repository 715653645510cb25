from typing import Optional, Tuple

from squintpy.core.scenario import Scenario
from .wbbg import WbbgOptions, WbbgSolution, wbbg_optimize

__all__ = ["sparse_ttd_bounds"]


def sparse_ttd_bounds(scenario: Scenario,
                      perf_ctx: Optional[WbbgSolution] = None,
                      opts: Optional[WbbgOptions] = None) -> Tuple[float, float]:
    """
    Sum spectral efficiency interval of a Sparse-TTD design, in bits/s/Hz.

    The lower end is the Non-TTD-WBBG sum-SE: a few TTDs can only help the phase shifter block.
    The upper end assumes the TTDs remove the squint completely while the phase shifters still
    lose E(b), :math:`\\sum_m \\log_2(1 + \\tilde\\gamma_m N E(b_m))`.

    Parameters
    ----------
    scenario: Scenario
        Validated scenario

    perf_ctx: WbbgSolution, optional
        WBBG solution for this scenario. Optimized here when not given

    opts: WbbgOptions, optional
        Used when the WBBG solution has to be computed. Defaults to the scenario seed

    Returns
    -------
    (float, float)
        Lower and upper sum spectral efficiency
    """
    # perf imports beamform
    from squintpy.perf.spectral import sum_se_sparse_upper, sum_se_wbbg

    if perf_ctx is None:
        opts = opts or WbbgOptions(seed=scenario.seed)
        perf_ctx = wbbg_optimize(scenario.array, scenario.grid, scenario.target.angle_rad, opts)

    lower = sum_se_wbbg(scenario, perf_ctx).sum_se
    upper = sum_se_sparse_upper(scenario).sum_se
    return lower, upper
