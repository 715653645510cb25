from dataclasses import dataclass, field
from typing import Dict, NamedTuple

import numpy as np
import pandas as pd

from squintpy.core.architecture import Architecture
from squintpy.core.geometry import ArrayConfig
from squintpy.core.hardware import CostModel
from squintpy.core.scenario import Scenario
from squintpy.types import Array

__all__ = ["COST_COLUMNS", "ComponentCounts", "CostBreakdown", "architecture_cost",
           "component_counts", "cost_sweep"]

COST_COLUMNS = ['bf', 'architecture', 'total_cost', 'ps_cost', 'ttd_cost', 'rf_cost',
                'fixed_cost']


class ComponentCounts(NamedTuple):
    n_ps: int
    n_ttd: int
    residual_bandwidth: float
    """Share of the fractional bandwidth the phase shifters have to cover"""


@dataclass(frozen=True)
class CostBreakdown:
    architecture: Architecture
    total: float
    components: Dict[str, float] = field(default_factory=dict)

    @classmethod
    def from_components(cls, architecture: Architecture, **components: float):
        return cls(architecture, float(sum(components.values())), components)


def component_counts(arch: Architecture, n_elements: int, n_ttd_sparse: int) -> ComponentCounts:
    """
    Phase shifter and TTD counts of an architecture.

    Non-TTD designs put one phase shifter behind every element, Full-TTD one delay unit. A
    Sparse-TTD design keeps the phase shifters and adds ``n_ttd_sparse`` delay units in front of
    sub-arrays. The delay units take over the aperture-wide part of the squint, so its phase
    shifters only span the fraction ``1 - n_ttd_sparse / N`` of the bandwidth.
    """
    if arch is Architecture.FullTTD_NBBG:
        return ComponentCounts(0, n_elements, 0.0)
    if arch is Architecture.SparseTTD_NBBG:
        return ComponentCounts(n_elements, n_ttd_sparse, 1 - n_ttd_sparse / n_elements)
    return ComponentCounts(n_elements, 0, 1.0)


def architecture_cost(arch: Architecture,
                      cfg: ArrayConfig,
                      n_rf: int,
                      n_ttd_sparse: int,
                      model: CostModel,
                      bf: float) -> CostBreakdown:
    """
    Hardware cost of an architecture at fractional bandwidth ``bf``.

    Parameters
    ----------
    arch: Architecture
        Architecture to price

    cfg: ArrayConfig
        Array whose element count sets the number of analog components

    n_rf: int
        Number of RF chains

    n_ttd_sparse: int
        TTD count of the Sparse-TTD design, between 0 and N

    model: CostModel
        Unit costs

    bf: float
        Fractional bandwidth B / f0, nonnegative

    Returns
    -------
    CostBreakdown
        Total and its 'ps', 'ttd', 'rf' and 'fixed' components. The Non-TTD-WBBG design books
        its per-band phase optimization as a fixed overhead proportional to its phase shifter cost

    Raises
    ------
    ValueError
        If a count or the fractional bandwidth is out of range
    """
    n = cfg.n_elements
    if not 0 <= n_ttd_sparse <= n:
        raise ValueError(f"n_ttd_sparse must be in [0, {n}], got {n_ttd_sparse}")
    if n_rf < 1:
        raise ValueError(f"n_rf must be at least 1, got {n_rf}")
    if not bf >= 0:
        raise ValueError(f"fractional bandwidth must be nonnegative, got {bf}")

    counts = component_counts(arch, n, n_ttd_sparse)
    ps = counts.n_ps * model.ps_unit_cost(counts.residual_bandwidth * bf)
    ttd = counts.n_ttd * model.ttd_unit_cost(bf)
    fixed = model.wbbg_overhead * ps if arch is Architecture.NonTTD_WBBG else 0.0
    return CostBreakdown.from_components(arch, ps=float(ps), ttd=float(ttd),
                                         rf=float(n_rf * model.rf_chain_cost), fixed=float(fixed))


def cost_sweep(scenario: Scenario, bf_grid: Array) -> pd.DataFrame:
    """
    Cost of every architecture over a grid of fractional bandwidths.

    Returns
    -------
    DataFrame
        Columns in ``COST_COLUMNS``, sorted by bf then architecture order
    """
    bf_grid = np.atleast_1d(np.asarray(bf_grid, dtype=float))
    if bf_grid.size == 0:
        raise ValueError("empty grid")

    k = scenario.cost.sparse_ttd_count(scenario.n_elements)
    rows = []
    for bf in np.sort(bf_grid, kind='mergesort'):
        for arch in Architecture:
            c = architecture_cost(arch, scenario.array, scenario.cost.n_rf, k, scenario.cost.model,
                                  float(bf))
            rows.append({
                'bf': float(bf),
                'architecture': arch.value,
                'total_cost': c.total,
                'ps_cost': c.components['ps'],
                'ttd_cost': c.components['ttd'],
                'rf_cost': c.components['rf'],
                'fixed_cost': c.components['fixed'],
            })
    return pd.DataFrame(rows, columns=COST_COLUMNS)
