import numpy as np

from squintpy.array import array_gain, narrowband_gain_closed_form
from squintpy.beamform.weights import mrt_phases
from squintpy.core.architecture import PerfCurve
from squintpy.core.scenario import Scenario
from squintpy.exceptions import DimensionMismatchError
from squintpy.linkchan import carrier_snr, impairment_factor
from .results import PerformanceResult

__all__ = ["narrowband_gains", "sum_se_full_ttd", "sum_se_nbbg", "sum_se_sparse_lower",
           "sum_se_sparse_upper", "sum_se_wbbg"]


def _snr(s: Scenario) -> np.ndarray:
    return carrier_snr(s.link, s.grid, s.target)


def _efficiency(s: Scenario) -> np.ndarray:
    e = impairment_factor(s.impairment, s.fractional_offsets, s.grid.edge_offset)
    return np.broadcast_to(e, (s.grid.size,))


def _full_ttd_se(s: Scenario) -> np.ndarray:
    return np.log2(1 + _snr(s) * s.n_elements * s.hybrid_efficiency)


def _phase_shifter_se(s: Scenario, gains: np.ndarray) -> np.ndarray:
    return np.log2(1 + _snr(s) * gains * _efficiency(s) * s.hybrid_efficiency)


def narrowband_gains(s: Scenario) -> np.ndarray:
    """
    Gain of center-carrier MRT weights at every carrier. Uses the closed form for half-wavelength
    spacing and the explicit array response otherwise.
    """
    theta = s.target.angle_rad
    if s.array.element_spacing_fraction == 0.5:
        return np.array([narrowband_gain_closed_form(s.array, b, theta)
                         for b in s.fractional_offsets])

    w = mrt_phases(s.array, theta).as_complex()
    return np.array([array_gain(w, s.array, b, theta) for b in s.fractional_offsets])


def sum_se_full_ttd(scenario: Scenario) -> PerformanceResult:
    """
    Full-TTD sum spectral efficiency :math:`\\sum_m \\log_2(1 + \\tilde\\gamma_m N \\eta)`.

    Every carrier sees the full array gain N. True-time-delay units add no phase shifter loss.
    """
    se = _full_ttd_se(scenario)
    return PerformanceResult.build(PerfCurve.FullTTD_NBBG, se, float(se.sum()))


def sum_se_nbbg(scenario: Scenario) -> PerformanceResult:
    """
    Non-TTD narrowband beam gain sum spectral efficiency,
    :math:`\\sum_m \\log_2(1 + \\tilde\\gamma_m G_{NB}(b_m, \\theta_u) E(b_m) \\eta)`.
    """
    se = _phase_shifter_se(scenario, narrowband_gains(scenario))
    return PerformanceResult.build(PerfCurve.NonTTD_NBBG, se, float(_full_ttd_se(scenario).sum()))


def sum_se_wbbg(scenario: Scenario, solution) -> PerformanceResult:
    """
    Non-TTD wideband beam gain sum spectral efficiency, with the per-carrier gains of a
    :class:`WbbgSolution` computed for this scenario.

    Raises
    ------
    DimensionMismatchError
        If the solution was computed for a different number of carriers
    """
    gains = np.asarray(solution.per_carrier_gain, dtype=float)
    if gains.shape != (scenario.grid.size,):
        raise DimensionMismatchError(f"solution has {gains.size} carrier gains, the grid has "
                                     f"{scenario.grid.size} carriers")
    se = _phase_shifter_se(scenario, gains)
    return PerformanceResult.build(PerfCurve.NonTTD_WBBG, se, float(_full_ttd_se(scenario).sum()))


def sum_se_sparse_lower(scenario: Scenario, solution) -> PerformanceResult:
    """Sparse-TTD lower bound, the Non-TTD-WBBG curve under the Sparse-TTD label"""
    wbbg = sum_se_wbbg(scenario, solution)
    return PerformanceResult.build(PerfCurve.SparseTTD_lower, wbbg.per_carrier_se,
                                   float(_full_ttd_se(scenario).sum()))


def sum_se_sparse_upper(scenario: Scenario) -> PerformanceResult:
    """
    Sparse-TTD upper bound :math:`\\sum_m \\log_2(1 + \\tilde\\gamma_m N E(b_m))`: squint fully
    removed by the TTDs, phase shifter loss kept. The bound carries no hybrid efficiency factor.
    """
    se = np.log2(1 + _snr(scenario) * scenario.n_elements * _efficiency(scenario))
    return PerformanceResult.build(PerfCurve.SparseTTD_upper, se,
                                   float(_full_ttd_se(scenario).sum()))
