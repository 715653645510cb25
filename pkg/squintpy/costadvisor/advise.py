from dataclasses import dataclass, field
from typing import Dict, Iterable, Mapping, Optional, Union

import numpy as np

from squintpy.core.architecture import Architecture, PerfCurve
from squintpy.core.scenario import Scenario
from squintpy.perf.results import PerformanceResult
from .cost import CostBreakdown
from .crossover import CrossoverThresholds, bandwidth_regime

__all__ = ["Recommendation", "advise", "architecture_performance"]

_TIE = 1e-12

PerfResults = Union[Mapping[PerfCurve, PerformanceResult], Iterable[PerformanceResult]]


@dataclass(frozen=True)
class Recommendation:
    """
    Outcome of the cost-performance trade-off at one fractional bandwidth.

    Parameters
    ----------
    architecture: Architecture
        Recommended architecture

    bf: float
        Fractional bandwidth of the scenario

    perf_weight: float
        Weight of the normalized sum-SE

    cost_weight: float
        Weight of the normalized cost

    scores: dict
        Score of every candidate

    perf_ratios: dict
        Sum-SE of every candidate divided by the Full-TTD sum-SE

    normalized_costs: dict
        Cost of every candidate divided by the largest cost

    thresholds: CrossoverThresholds, optional
        Cost crossover thresholds of the scenario
    """
    architecture: Architecture
    bf: float
    perf_weight: float
    cost_weight: float
    scores: Dict[Architecture, float] = field(default_factory=dict)
    perf_ratios: Dict[Architecture, float] = field(default_factory=dict)
    normalized_costs: Dict[Architecture, float] = field(default_factory=dict)
    thresholds: Optional[CrossoverThresholds] = None

    @property
    def regime(self) -> str:
        return bandwidth_regime(self.bf, self.thresholds)

    def as_dict(self) -> dict:
        """Machine readable record with plain JSON types"""
        th = self.thresholds
        return {
            'architecture': self.architecture.value,
            'bf': self.bf,
            'perf_weight': self.perf_weight,
            'cost_weight': self.cost_weight,
            'scores': {a.value: s for a, s in self.scores.items()},
            'perf_ratios': {a.value: s for a, s in self.perf_ratios.items()},
            'normalized_costs': {a.value: s for a, s in self.normalized_costs.items()},
            'th1': None if th is None else th.th1,
            'th2': None if th is None else th.th2,
            'degenerate': None if th is None else th.degenerate,
            'regime': self.regime,
        }

    def summary(self):
        from .summary import RecommendationSummary
        return RecommendationSummary(self)


def architecture_performance(perf_results: PerfResults) -> Dict[Architecture, float]:
    """
    Sum-SE attributed to every hardware class. The Sparse-TTD design is credited with the
    midpoint of its lower and upper bound.

    Raises
    ------
    ValueError
        If a curve is missing
    """
    if isinstance(perf_results, Mapping):
        results = {PerfCurve(k): v for k, v in perf_results.items()}
    else:
        results = {r.architecture: r for r in perf_results}

    missing = [c.value for c in PerfCurve if c not in results]
    if missing:
        raise ValueError(f"missing performance rows for {', '.join(missing)}")

    return {
        Architecture.FullTTD_NBBG: results[PerfCurve.FullTTD_NBBG].sum_se,
        Architecture.NonTTD_NBBG: results[PerfCurve.NonTTD_NBBG].sum_se,
        Architecture.NonTTD_WBBG: results[PerfCurve.NonTTD_WBBG].sum_se,
        Architecture.SparseTTD_NBBG: 0.5 * (results[PerfCurve.SparseTTD_lower].sum_se
                                            + results[PerfCurve.SparseTTD_upper].sum_se),
    }


def advise(scenario: Scenario,
           perf_weight: float,
           cost_weight: float,
           perf_results: PerfResults,
           cost_results: Iterable[CostBreakdown],
           thresholds: Optional[CrossoverThresholds] = None) -> Recommendation:
    """
    Recommends an architecture by trading normalized spectral efficiency against normalized cost.

    Every candidate scores ``perf_weight * sum_se / R_FN - cost_weight * cost / max_cost`` where
    R_FN is the Full-TTD sum-SE and max_cost the largest cost among the candidates. The highest
    score wins and ties go to the cheaper architecture.

    Parameters
    ----------
    scenario: Scenario
        Scenario the results were computed for

    perf_weight: float
        Weight in [0, 1] of the performance term

    cost_weight: float
        Weight in [0, 1] of the cost term. Both weights must sum to 1

    perf_results: dict or iterable of PerformanceResult
        The five spectral efficiency curves, e.g. the output of :func:`evaluate_scenario`

    cost_results: iterable of CostBreakdown
        Cost of each of the four architectures at the scenario's bandwidth

    thresholds: CrossoverThresholds, optional
        Crossover thresholds, reported with the recommendation

    Returns
    -------
    Recommendation
        Winning architecture and the full score table

    Raises
    ------
    ValueError
        If the weights are invalid or a result row is missing
    """
    if not (0 <= perf_weight <= 1 and 0 <= cost_weight <= 1):
        raise ValueError("weights must lie in [0, 1]")
    if not np.isclose(perf_weight + cost_weight, 1, rtol=0, atol=1e-9):
        raise ValueError("perf_weight and cost_weight must sum to 1")

    perf = architecture_performance(perf_results)
    costs = {c.architecture: c.total for c in cost_results}
    missing = [a.value for a in Architecture if a not in costs]
    if missing:
        raise ValueError(f"missing cost rows for {', '.join(missing)}")

    reference = perf[Architecture.FullTTD_NBBG]
    max_cost = max(costs[a] for a in Architecture)

    ratios = {a: perf[a] / reference if reference > 0 else 1.0 for a in Architecture}
    norm_costs = {a: costs[a] / max_cost if max_cost > 0 else 0.0 for a in Architecture}
    scores = {a: perf_weight * ratios[a] - cost_weight * norm_costs[a] for a in Architecture}

    best = max(scores.values())
    candidates = [a for a in Architecture if scores[a] >= best - _TIE]
    winner = min(candidates, key=lambda a: costs[a])

    return Recommendation(winner, scenario.fractional_bandwidth, perf_weight, cost_weight,
                          scores, ratios, norm_costs, thresholds)
