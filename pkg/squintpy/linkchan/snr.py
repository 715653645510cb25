from __future__ import annotations

from typing import TYPE_CHECKING

import numpy as np

from squintpy.core.hardware import LinkModel
from .atmosphere import atmospheric_specific_attenuation

if TYPE_CHECKING:
    from squintpy.core.geometry import CarrierGrid, SteeringTarget

__all__ = ["carrier_snr"]


def carrier_snr(link: LinkModel, grid: CarrierGrid, target: SteeringTarget) -> np.ndarray:
    """
    Linear per-antenna SNR of every carrier.

    Without atmosphere every carrier sees the center-carrier SNR. With atmosphere the SNR is
    tilted by the difference in gaseous attenuation relative to the center carrier over the
    link distance, so the center carrier keeps its SNR exactly.

    Parameters
    ----------
    link: LinkModel
        Center-carrier SNR and atmosphere switch

    grid: CarrierGrid
        Carriers

    target: SteeringTarget
        Provides the link distance

    Returns
    -------
    ndarray
        Vector of 2M + 1 linear SNRs
    """
    snr = np.full(grid.size, link.snr0)
    if not link.atmosphere_enabled or target.link_distance_m == 0:
        return snr

    alpha = atmospheric_specific_attenuation(grid.frequencies_hz, link)
    alpha0 = atmospheric_specific_attenuation(grid.center_frequency_hz, link)
    excess_db = (alpha - alpha0) * (target.link_distance_m / 1000)
    return snr * 10 ** (-excess_db / 10)
