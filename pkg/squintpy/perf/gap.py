from typing import NamedTuple

import numpy as np

from squintpy.core.scenario import Scenario
from squintpy.exceptions import DimensionMismatchError
from squintpy.linkchan import carrier_snr, impairment_factor
from squintpy.types import Array
from .results import PerformanceResult, normalized_gap

__all__ = ["PerformanceGap", "log_ratio_gap", "performance_gap"]


class PerformanceGap(NamedTuple):
    gap: float
    normalized_gap: float


def performance_gap(a: PerformanceResult, ref: PerformanceResult) -> PerformanceGap:
    """
    Sum spectral efficiency lost by ``a`` relative to ``ref``.

    Parameters
    ----------
    a: PerformanceResult
        Evaluated architecture

    ref: PerformanceResult
        Reference, usually the Full-TTD result

    Returns
    -------
    PerformanceGap
        ``ref.sum_se - a.sum_se`` and the same divided by ``ref.sum_se`` (clamped to [0, 1])

    Raises
    ------
    DimensionMismatchError
        If the two results cover different numbers of carriers
    """
    if a.size != ref.size:
        raise DimensionMismatchError(f"results cover {a.size} and {ref.size} carriers")
    gap = ref.sum_se - a.sum_se
    return PerformanceGap(gap, normalized_gap(gap, ref.sum_se))


def log_ratio_gap(scenario: Scenario, gains: Array) -> float:
    """
    Gap to Full-TTD as a sum of per-carrier log ratios

    .. math::

        \\sum_m \\log_2 \\frac{1 + \\tilde\\gamma_m N \\eta}
                             {1 + \\tilde\\gamma_m G_m E(b_m) \\eta}

    Parameters
    ----------
    scenario: Scenario
        Validated scenario

    gains: array_like
        Array gain of the phase shifter design at every carrier

    Returns
    -------
    float
        Gap in bits/s/Hz
    """
    gains = np.asarray(gains, dtype=float)
    if gains.shape != (scenario.grid.size,):
        raise DimensionMismatchError(f"expected {scenario.grid.size} carrier gains, "
                                     f"got {gains.size}")

    snr = carrier_snr(scenario.link, scenario.grid, scenario.target)
    e = impairment_factor(scenario.impairment, scenario.fractional_offsets,
                          scenario.grid.edge_offset)
    eta = scenario.hybrid_efficiency
    n = scenario.n_elements
    return float(np.sum(np.log2((1 + snr * n * eta) / (1 + snr * gains * e * eta))))
