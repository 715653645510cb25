from dataclasses import dataclass, field

import numpy as np

from squintpy.core.architecture import PerfCurve

__all__ = ["PerformanceResult"]


@dataclass(frozen=True)
class PerformanceResult:
    """
    Spectral efficiency of one architecture over the carriers of a scenario.

    Parameters
    ----------
    architecture: PerfCurve
        Curve label

    per_carrier_se: ndarray
        Spectral efficiency of every carrier in bits/s/Hz

    sum_se: float
        Sum over the carriers

    gap_vs_full_ttd: float
        Full-TTD sum-SE minus ``sum_se``

    normalized_gap: float
        Gap divided by the Full-TTD sum-SE, clamped to [0, 1]
    """
    architecture: PerfCurve
    per_carrier_se: np.ndarray = field(repr=False)
    sum_se: float
    gap_vs_full_ttd: float
    normalized_gap: float

    @classmethod
    def build(cls, architecture: PerfCurve, per_carrier_se: np.ndarray, reference_sum_se: float):
        se = np.asarray(per_carrier_se, dtype=float)
        se.setflags(write=False)
        total = float(se.sum())
        gap = reference_sum_se - total
        return cls(architecture, se, total, gap, normalized_gap(gap, reference_sum_se))

    @property
    def size(self) -> int:
        return len(self.per_carrier_se)


def normalized_gap(gap: float, reference_sum_se: float) -> float:
    if reference_sum_se <= 0:
        return 0.0
    return float(np.clip(gap / reference_sum_se, 0.0, 1.0))
