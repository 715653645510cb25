import logging
from itertools import combinations
from typing import List, NamedTuple, Optional

import numpy as np
from scipy.optimize import bisect

from squintpy._config import get_option
from squintpy.core.architecture import Architecture
from squintpy.core.geometry import ArrayConfig
from squintpy.core.hardware import CostModel
from squintpy.exceptions import NoCrossoverError
from .cost import architecture_cost

__all__ = ["CrossoverThresholds", "bandwidth_regime", "crossover_thresholds"]

logger = logging.getLogger(__name__)

_SCAN_POINTS = 2001
_CLASSES = (Architecture.NonTTD_NBBG, Architecture.SparseTTD_NBBG, Architecture.FullTTD_NBBG)


class CrossoverThresholds(NamedTuple):
    th1: float
    """Largest bandwidth at which the Non-TTD design is still the cheapest"""
    th2: float
    """Smallest bandwidth from which the Full-TTD design is the cheapest"""
    degenerate: bool = False
    """True when only one crossing exists, so that th1 equals th2"""


def crossover_thresholds(cfg: ArrayConfig,
                         n_rf: int,
                         n_ttd_sparse: int,
                         model: CostModel,
                         bf_max: float = 1.0) -> CrossoverThresholds:
    """
    Fractional bandwidths at which the cost order of the Non-TTD, Sparse-TTD and Full-TTD designs
    changes.

    Every pairwise cost difference is scanned on a fine grid over (0, bf_max] and each sign
    change is refined by bisection to the relative tolerance set by the 'EPS.CROSSOVER' option.
    th1 is the first crossing and th2 the last one.

    Parameters
    ----------
    cfg: ArrayConfig
        Array whose element count sets the component counts

    n_rf: int
        Number of RF chains

    n_ttd_sparse: int
        TTD count of the Sparse-TTD design. With 0 TTDs the Sparse design costs the same as the
        Non-TTD design and the thresholds are reported degenerate

    model: CostModel
        Unit costs

    bf_max: float, optional
        Upper end of the search range

    Returns
    -------
    CrossoverThresholds
        The two thresholds

    Raises
    ------
    NoCrossoverError
        If no cost difference changes sign in the search range
    """
    assert bf_max > 0, "bf_max must be positive"

    def diff(a: Architecture, b: Architecture):
        def f(bf: float) -> float:
            return (architecture_cost(a, cfg, n_rf, n_ttd_sparse, model, bf).total
                    - architecture_cost(b, cfg, n_rf, n_ttd_sparse, model, bf).total)

        return f

    classes = _CLASSES if n_ttd_sparse > 0 else (_CLASSES[0], _CLASSES[2])
    grid = np.linspace(0, bf_max, _SCAN_POINTS)[1:]
    rtol = get_option('EPS.CROSSOVER')

    roots: List[float] = []
    for a, b in combinations(classes, 2):
        f = diff(a, b)
        values = np.array([f(x) for x in grid])
        for i in range(len(grid) - 1):
            if values[i] == 0:
                roots.append(float(grid[i]))
            elif values[i] * values[i + 1] < 0:
                roots.append(float(bisect(f, grid[i], grid[i + 1], rtol=rtol)))
        if values[-1] == 0:
            roots.append(float(grid[-1]))

    if not roots:
        raise NoCrossoverError(bf_max)

    th1, th2 = min(roots), max(roots)
    degenerate = n_ttd_sparse == 0 or th1 == th2
    logger.info("cost crossovers at bf=%.6g and bf=%.6g%s", th1, th2,
                " (degenerate)" if degenerate else "")
    return CrossoverThresholds(th1, th2, degenerate)


def bandwidth_regime(bf: float, thresholds: Optional[CrossoverThresholds]) -> str:
    """Names the cost regime of ``bf``: 'narrowband', 'intermediate' or 'ultra-wideband'"""
    if thresholds is None:
        return 'unknown'
    if bf < thresholds.th1:
        return 'narrowband'
    if bf > thresholds.th2:
        return 'ultra-wideband'
    return 'intermediate'
