from dataclasses import dataclass, field
from typing import Optional, Tuple, Union

import numpy as np

from squintpy.exceptions import CatalogError, ScenarioError

__all__ = ["CostModel", "CostSettings", "DeviceSpec", "ImpairmentModel", "LinkModel"]

IMPAIRMENT_KINDS = ('ideal', 'linear_db', 'linear_amplitude', 'device')


@dataclass(frozen=True)
class DeviceSpec:
    """
    Lumped description of a wideband phase shifter or true-time-delay unit.

    Frequencies and delays are stored in SI units. ``resolution_bits`` is either the number of
    control bits or the string "continuous".
    """
    name: str
    kind: str
    resolution_bits: Union[int, str]
    freq_range_hz: Tuple[float, float]
    insertion_loss_db: Tuple[float, float]
    delay_range_s: Optional[float] = None
    max_phase_error_deg: Optional[float] = None
    max_delay_error_s: Optional[float] = None

    @property
    def is_continuous(self) -> bool:
        return self.resolution_bits == "continuous"

    @property
    def loss_spread_db(self) -> float:
        return self.insertion_loss_db[1] - self.insertion_loss_db[0]

    def covers(self, f_min_hz: float, f_max_hz: float) -> bool:
        """True if the device's operating range contains the band [f_min_hz, f_max_hz]"""
        lo, hi = self.freq_range_hz
        return lo <= f_min_hz and f_max_hz <= hi

    def check(self):
        if self.kind not in ('PS', 'TTD'):
            raise CatalogError(f"kind must be PS or TTD, got {self.kind!r}", device=self.name)
        if not (self.is_continuous or (isinstance(self.resolution_bits, (int, np.integer))
                                       and self.resolution_bits >= 1)):
            raise CatalogError("resolution must be a positive bit count or 'continuous'",
                               device=self.name)
        lo, hi = self.freq_range_hz
        if not 0 < lo < hi:
            raise CatalogError(f"frequency range min must be below max, got ({lo}, {hi})",
                               device=self.name)
        lo, hi = self.insertion_loss_db
        if not 0 <= lo <= hi:
            raise CatalogError(f"loss_min must not exceed loss_max, got ({lo}, {hi})",
                               device=self.name)
        if self.delay_range_s is not None and not self.delay_range_s > 0:
            raise CatalogError("delay range must be positive", device=self.name)
        return self


@dataclass(frozen=True)
class ImpairmentModel:
    """
    Frequency dependent phase shifter efficiency E(b).

    Parameters
    ----------
    kind: str
        One of 'ideal', 'linear_db', 'linear_amplitude' or 'device'

    edge_loss_db: float
        Loss at the band edge for the linear kinds

    device: DeviceSpec, optional
        Catalog entry whose insertion-loss spread sets the edge loss for the 'device' kind
    """
    kind: str = 'linear_db'
    edge_loss_db: float = 6.0
    device: Optional[DeviceSpec] = None

    @property
    def effective_edge_loss_db(self) -> float:
        if self.kind == 'ideal':
            return 0.0
        if self.kind == 'device':
            return self.device.loss_spread_db
        return self.edge_loss_db

    def check(self):
        if self.kind not in IMPAIRMENT_KINDS:
            raise ScenarioError(f"impairment.kind must be one of {', '.join(IMPAIRMENT_KINDS)}, "
                                f"got {self.kind!r}")
        if self.kind == 'device':
            if self.device is None:
                raise ScenarioError("impairment.kind 'device' needs impairment.device")
            self.device.check()
        elif not (np.isfinite(self.edge_loss_db) and self.edge_loss_db >= 0):
            raise ScenarioError(f"impairment.edge_loss_db must be >= 0, got {self.edge_loss_db}")
        return self


@dataclass(frozen=True)
class LinkModel:
    """
    Per-antenna link budget at the center carrier and the atmosphere it propagates through.

    The atmosphere fields describe the conditions the bundled attenuation table was computed at.
    """
    snr0_db: float = 0.0
    atmosphere_enabled: bool = False
    temperature_c: float = 15.0
    pressure_pa: float = 101300.0
    water_vapor_g_m3: float = 7.5

    @property
    def snr0(self) -> float:
        return 10 ** (self.snr0_db / 10)

    def check(self):
        if not np.isfinite(self.snr0_db):
            raise ScenarioError(f"link.snr0_db must be finite, got {self.snr0_db}")
        if self.atmosphere_enabled and (self.temperature_c, self.pressure_pa,
                                        self.water_vapor_g_m3) != (15.0, 101300.0, 7.5):
            raise ScenarioError("the bundled attenuation table is only valid at 15 C, 101300 Pa "
                                "and 7.5 g/m3 water vapour")
        return self


@dataclass(frozen=True)
class CostModel:
    """
    Parametric unit costs, in arbitrary units, as a function of the fractional bandwidth bf.

    A phase shifter costs ``ps_base * (1 + ps_bandwidth_slope * bf ** ps_bandwidth_exponent)``
    and a true-time-delay unit costs ``ttd_base * (1 + ttd_bandwidth_slope * bf)``.
    """
    ps_base: float = 1.0
    ps_bandwidth_slope: float = 40.0
    ps_bandwidth_exponent: float = 2.0
    ttd_base: float = 8.0
    ttd_bandwidth_slope: float = 0.5
    rf_chain_cost: float = 4.0
    wbbg_overhead: float = 0.1

    def ps_unit_cost(self, bf: float) -> float:
        return self.ps_base * (1 + self.ps_bandwidth_slope * bf ** self.ps_bandwidth_exponent)

    def ttd_unit_cost(self, bf: float) -> float:
        return self.ttd_base * (1 + self.ttd_bandwidth_slope * bf)

    def check(self):
        if not (self.ps_base > 0 and self.ttd_base > 0 and self.rf_chain_cost > 0):
            raise ScenarioError("cost model base costs must all be > 0")
        if not self.ps_bandwidth_exponent > 1:
            raise ScenarioError("cost.ps_bandwidth_exponent must be > 1 (superlinear PS growth)")
        if self.ps_bandwidth_slope < 0 or self.ttd_bandwidth_slope < 0 or self.wbbg_overhead < 0:
            raise ScenarioError("cost model slopes and overhead must be >= 0")
        if not self.ttd_base > self.ps_base:
            raise ScenarioError("cost.ttd_base must exceed cost.ps_base")
        return self


@dataclass(frozen=True)
class CostSettings:
    """Hardware counts and unit costs used by the cost model"""
    model: CostModel = field(default_factory=CostModel)
    n_rf: int = 1
    n_ttd_sparse: Optional[int] = None

    def sparse_ttd_count(self, n_elements: int) -> int:
        if self.n_ttd_sparse is None:
            return max(1, n_elements // 16)
        return self.n_ttd_sparse
