from .advise import Recommendation, advise, architecture_performance
from .cost import (
    COST_COLUMNS, ComponentCounts, CostBreakdown, architecture_cost, component_counts, cost_sweep
)
from .crossover import CrossoverThresholds, bandwidth_regime, crossover_thresholds
