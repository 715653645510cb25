from dataclasses import dataclass

import numpy as np
from scipy.constants import c

from squintpy.exceptions import ScenarioError

__all__ = ["ArrayConfig", "CarrierGrid", "SteeringTarget"]


@dataclass(frozen=True)
class ArrayConfig:
    """
    Uniform linear array geometry.

    Parameters
    ----------
    n_elements: int
        Number of antenna elements N

    center_frequency_hz: float
        Center carrier frequency f0 in Hz

    element_spacing_fraction: float
        Element spacing as a fraction of the center-frequency wavelength
    """
    n_elements: int
    center_frequency_hz: float
    element_spacing_fraction: float = 0.5

    @property
    def wavelength_m(self) -> float:
        return c / self.center_frequency_hz

    @property
    def element_spacing_m(self) -> float:
        return self.element_spacing_fraction * self.wavelength_m

    @property
    def indices(self) -> np.ndarray:
        return np.arange(self.n_elements)

    def check(self):
        if not isinstance(self.n_elements, (int, np.integer)) or self.n_elements < 1:
            raise ScenarioError(f"array.n_elements must be an integer >= 1, got {self.n_elements}")
        if not self.center_frequency_hz > 0:
            raise ScenarioError(f"array.f0_hz must be > 0, got {self.center_frequency_hz}")
        if not self.element_spacing_fraction > 0:
            raise ScenarioError("array.spacing_fraction must be > 0, "
                                f"got {self.element_spacing_fraction}")
        return self


@dataclass(frozen=True)
class CarrierGrid:
    """
    2M + 1 uniformly spaced carriers spanning the bandwidth B around the center frequency.

    The extreme carriers sit at the band edges, so the fractional offsets are
    :math:`b_m = (m / M) B / (2 f_0)` for :math:`m = -M, \\dots, M`.
    """
    half_count: int
    total_bandwidth_hz: float
    center_frequency_hz: float

    @property
    def size(self) -> int:
        return 2 * self.half_count + 1

    @property
    def fractional_bandwidth(self) -> float:
        return self.total_bandwidth_hz / self.center_frequency_hz

    @property
    def edge_offset(self) -> float:
        """Largest fractional offset B / (2 f0)"""
        return self.total_bandwidth_hz / (2 * self.center_frequency_hz)

    @property
    def indices(self) -> np.ndarray:
        return np.arange(-self.half_count, self.half_count + 1)

    @property
    def fractional_offsets(self) -> np.ndarray:
        if self.half_count == 0:
            return np.zeros(1)
        return self.indices / self.half_count * self.edge_offset

    @property
    def frequencies_hz(self) -> np.ndarray:
        return self.center_frequency_hz * (1 + self.fractional_offsets)

    def check(self):
        if not isinstance(self.half_count, (int, np.integer)) or self.half_count < 0:
            raise ScenarioError(f"grid.half_count must be an integer >= 0, got {self.half_count}")
        if not self.center_frequency_hz > 0:
            raise ScenarioError("grid center frequency must be > 0, "
                                f"got {self.center_frequency_hz}")
        if not self.total_bandwidth_hz >= 0:
            raise ScenarioError(f"grid.bandwidth_hz must be >= 0, got {self.total_bandwidth_hz}")
        if self.edge_offset >= 1:
            raise ScenarioError(f"fractional offset >= 1: B/(2f0) = {self.edge_offset:g} puts the "
                                "lowest carrier at a nonpositive frequency")
        return self


@dataclass(frozen=True)
class SteeringTarget:
    """User direction from boresight and the link distance seen by the atmospheric model"""
    angle_rad: float
    link_distance_m: float = 100.0

    @property
    def angle_deg(self) -> float:
        return float(np.degrees(self.angle_rad))

    @classmethod
    def from_degrees(cls, angle_deg: float, link_distance_m: float = 100.0):
        return cls(float(np.radians(angle_deg)), link_distance_m)

    def check(self):
        if not abs(self.angle_rad) < np.pi / 2:
            raise ScenarioError(f"|target.angle| must be below 90 degrees, got {self.angle_deg:g}")
        if not self.link_distance_m >= 0:
            raise ScenarioError(f"target.distance_m must be >= 0, got {self.link_distance_m}")
        return self
