import logging
from dataclasses import dataclass
from typing import Optional, Union

import numpy as np

from squintpy.array import array_gain
from squintpy.core.geometry import ArrayConfig
from squintpy.exceptions import DelayRangeError, DimensionMismatchError
from squintpy.types import Array

__all__ = ["DelayWeights", "PhaseOnlyWeights", "full_ttd_delays", "mrt_phases", "quantize_delays",
           "quantize_phases", "wrap_phase"]

logger = logging.getLogger(__name__)


def wrap_phase(phases: Array) -> np.ndarray:
    """Maps angles into the canonical range (-π, π]"""
    phases = np.asarray(phases, dtype=float)
    return np.pi - np.mod(np.pi - phases, 2 * np.pi)


@dataclass(frozen=True)
class PhaseOnlyWeights:
    """Analog beamformer realized by phase shifters. Element 0 is the phase reference."""
    phases_rad: np.ndarray

    def __post_init__(self):
        phases = wrap_phase(self.phases_rad)
        phases.setflags(write=False)
        object.__setattr__(self, 'phases_rad', phases)

    def __len__(self):
        return len(self.phases_rad)

    def as_complex(self) -> np.ndarray:
        return np.exp(1j * self.phases_rad)

    def gain(self, cfg: ArrayConfig, b: float, theta: float) -> float:
        return array_gain(self.as_complex(), cfg, b, theta)


@dataclass(frozen=True)
class DelayWeights:
    """Analog beamformer realized by true-time-delay units, delays in seconds"""
    delays_s: np.ndarray
    max_delay_s: float

    def __post_init__(self):
        delays = np.array(self.delays_s, dtype=float)
        delays.setflags(write=False)
        object.__setattr__(self, 'delays_s', delays)

    def __len__(self):
        return len(self.delays_s)

    def as_complex(self, cfg: ArrayConfig, b: float) -> np.ndarray:
        """Weights the delays realize at carrier ``f0 (1 + b)``"""
        if len(self) != cfg.n_elements:
            raise DimensionMismatchError(f"expected {cfg.n_elements} delays, got {len(self)}")
        f = cfg.center_frequency_hz * (1 + b)
        return np.exp(-2j * np.pi * f * self.delays_s)

    def gain(self, cfg: ArrayConfig, b: float, theta: float) -> float:
        return array_gain(self.as_complex(cfg, b), cfg, b, theta)


def mrt_phases(cfg: ArrayConfig, theta_u: float) -> PhaseOnlyWeights:
    """
    Narrowband maximum ratio transmission weights for the center carrier.

    The phases match the center-carrier steering vector, so the gain at ``b = 0`` is N.

    Examples
    --------
    >>> from squintpy.core import ArrayConfig
    >>> mrt_phases(ArrayConfig(2, 28e9), np.pi / 2).phases_rad
    array([0.        , 3.14159265])
    """
    phase = -np.pi * (2 * cfg.element_spacing_fraction) * cfg.indices * np.sin(theta_u)
    return PhaseOnlyWeights(phase)


def full_ttd_delays(cfg: ArrayConfig, theta_u: float,
                    max_delay_s: Optional[float] = None) -> DelayWeights:
    """
    True-time-delay settings that steer every carrier to ``theta_u``.

    The delay of element n is :math:`n d \\sin\\theta_u / c`, shifted so the smallest delay is 0.

    Parameters
    ----------
    cfg: ArrayConfig
        Array geometry

    theta_u: float
        User direction in radians

    max_delay_s: float, optional
        Largest delay the delay lines provide. Defaults to the propagation time across the
        full aperture, :math:`(N - 1) d / c`

    Returns
    -------
    DelayWeights
        Nonnegative delays

    Raises
    ------
    DelayRangeError
        If the steering direction needs more delay than ``max_delay_s``
    """
    # d / c = spacing_fraction / f0
    step = cfg.element_spacing_fraction / cfg.center_frequency_hz
    delays = cfg.indices * step * np.sin(theta_u)
    delays = delays - delays.min()

    if max_delay_s is None:
        max_delay_s = (cfg.n_elements - 1) * step
    required = float(delays.max())
    if required > max_delay_s * (1 + 1e-12):
        raise DelayRangeError(required, max_delay_s)
    return DelayWeights(delays, max_delay_s)


def quantize_phases(weights: PhaseOnlyWeights, bits: Union[int, str]) -> PhaseOnlyWeights:
    """
    Snaps phases to the closest level of a ``bits``-bit phase shifter.

    A continuous phase shifter ("continuous") leaves the weights unchanged.
    """
    if bits == "continuous":
        return weights
    assert isinstance(bits, (int, np.integer)) and bits >= 1, "bits must be a positive integer"
    step = 2 * np.pi / 2 ** bits
    return PhaseOnlyWeights(np.round(weights.phases_rad / step) * step)


def quantize_delays(weights: DelayWeights, bits: Union[int, str],
                    delay_range_s: float) -> DelayWeights:
    """
    Snaps delays to the grid of a ``bits``-bit delay line spanning ``delay_range_s``.

    Delays beyond the range saturate at the range.
    """
    if bits == "continuous":
        return weights
    assert isinstance(bits, (int, np.integer)) and bits >= 1, "bits must be a positive integer"
    if weights.delays_s.max() > delay_range_s * (1 + 1e-12):
        logger.warning("delays up to %.4g ps saturate a %.4g ps delay line",
                       weights.delays_s.max() * 1e12, delay_range_s * 1e12)
    step = delay_range_s / (2 ** bits - 1)
    delays = np.clip(np.round(weights.delays_s / step) * step, 0, delay_range_s)
    return DelayWeights(delays, delay_range_s)
