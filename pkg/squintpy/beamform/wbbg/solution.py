from dataclasses import dataclass, field, fields, replace
from typing import Optional

import numpy as np

from squintpy._config import get_option
from squintpy.beamform.weights import PhaseOnlyWeights

__all__ = ["WbbgOptions", "WbbgSolution"]


@dataclass(frozen=True)
class WbbgOptions:
    """
    Settings of the wideband beam gain optimizer. Fields left as None take the value of the
    matching 'WBBG.*' option when the optimizer is built.
    """
    restarts: Optional[int] = None
    max_iters: Optional[int] = None
    tolerance: Optional[float] = None
    seed: int = 0
    step: Optional[float] = None
    polish: Optional[bool] = None

    def resolved(self) -> 'WbbgOptions':
        defaults = {
            'restarts': 'WBBG.RESTARTS',
            'max_iters': 'WBBG.MAX_ITERS',
            'tolerance': 'WBBG.TOLERANCE',
            'step': 'WBBG.STEP',
            'polish': 'WBBG.POLISH',
        }
        values = {f.name: getattr(self, f.name) for f in fields(self)}
        for name, key in defaults.items():
            if values[name] is None:
                values[name] = get_option(key)
        opts = replace(self, **values)

        assert opts.restarts >= 1, "restarts must be at least 1"
        assert opts.max_iters >= 1, "max_iters must be at least 1"
        assert opts.tolerance > 0, "tolerance must be positive"
        assert opts.seed >= 0, "seed must be nonnegative"
        return opts


@dataclass(frozen=True)
class WbbgSolution:
    """
    Outcome of the max-min beam gain optimization.

    Parameters
    ----------
    weights: PhaseOnlyWeights
        Optimized phases

    min_gain: float
        Smallest array gain over the carriers

    per_carrier_gain: ndarray
        Array gain at every carrier of the grid

    iterations: int
        Ascent iterations spent by the winning restart

    converged: bool
        Whether the winning restart met the tolerance before running out of iterations

    seed: int
        Seed of the random restarts

    restart: int
        Index of the winning restart, 0 being the MRT start

    polished: bool
        Whether the nlopt refinement improved the winning restart
    """
    weights: PhaseOnlyWeights
    min_gain: float
    per_carrier_gain: np.ndarray = field(repr=False)
    iterations: int
    converged: bool
    seed: int
    restart: int = 0
    polished: bool = False

    @property
    def gain_spread(self) -> float:
        """Ratio of the largest to the smallest carrier gain"""
        if self.min_gain <= 0:
            return np.inf
        return float(self.per_carrier_gain.max() / self.min_gain)
