from dataclasses import dataclass, field, replace

import numpy as np

from squintpy.exceptions import ScenarioError
from .geometry import ArrayConfig, CarrierGrid, SteeringTarget
from .hardware import CostSettings, ImpairmentModel, LinkModel

__all__ = ["Scenario", "validate_scenario", "with_fractional_bandwidth"]


@dataclass(frozen=True)
class Scenario:
    """
    Complete description of a single-user line-of-sight link served by a hybrid beamformer.

    Parameters
    ----------
    array: ArrayConfig
        Antenna array geometry

    grid: CarrierGrid
        Carriers over which performance is summed

    target: SteeringTarget
        Direction and distance of the user

    impairment: ImpairmentModel
        Phase shifter efficiency over the band

    link: LinkModel
        Per-antenna SNR at the center carrier and atmosphere switch

    hybrid_efficiency: float
        Fraction η of the fully digital gain retained by the hybrid architecture

    cost: CostSettings
        Hardware counts and unit cost parameters

    seed: int
        Seed of the random restarts of the wideband beam gain optimizer
    """
    array: ArrayConfig
    grid: CarrierGrid
    target: SteeringTarget
    impairment: ImpairmentModel = field(default_factory=ImpairmentModel)
    link: LinkModel = field(default_factory=LinkModel)
    hybrid_efficiency: float = 1.0
    cost: CostSettings = field(default_factory=CostSettings)
    seed: int = 0

    @property
    def fractional_offsets(self) -> np.ndarray:
        return self.grid.fractional_offsets

    @property
    def fractional_bandwidth(self) -> float:
        return self.grid.fractional_bandwidth

    @property
    def n_elements(self) -> int:
        return self.array.n_elements


def validate_scenario(s: Scenario) -> Scenario:
    """
    Checks every invariant of the scenario and its components.

    Parameters
    ----------
    s: Scenario
        Scenario to check

    Returns
    -------
    Scenario
        The same scenario, unchanged

    Raises
    ------
    ScenarioError
        Names the first invariant that does not hold
    """
    s.array.check()
    s.grid.check()
    if s.grid.center_frequency_hz != s.array.center_frequency_hz:
        raise ScenarioError("grid and array disagree on the center frequency")
    s.target.check()
    s.impairment.check()
    s.link.check()
    if not 0 < s.hybrid_efficiency <= 1:
        raise ScenarioError(f"hybrid_efficiency must be in (0, 1], got {s.hybrid_efficiency}")

    s.cost.model.check()
    if s.cost.n_rf < 1:
        raise ScenarioError(f"cost.n_rf must be >= 1, got {s.cost.n_rf}")
    k = s.cost.sparse_ttd_count(s.n_elements)
    if not 0 <= k <= s.n_elements:
        raise ScenarioError(f"cost.n_ttd_sparse must be in [0, {s.n_elements}], got {k}")
    if not isinstance(s.seed, (int, np.integer)) or s.seed < 0:
        raise ScenarioError(f"seed must be a nonnegative integer, got {s.seed}")
    return s


def with_fractional_bandwidth(s: Scenario, bf: float) -> Scenario:
    """Copy of the scenario whose total bandwidth is ``bf * f0``"""
    grid = replace(s.grid, total_bandwidth_hz=bf * s.grid.center_frequency_hz)
    return replace(s, grid=grid)
