import logging
from typing import Callable, Optional, Tuple

import nlopt as nl
import numpy as np

from squintpy._config import get_option
from squintpy.core.geometry import ArrayConfig
from squintpy.types import Array, Numeric

__all__ = ["EpigraphProblem", "NloptProblem"]

logger = logging.getLogger(__name__)


class NloptProblem:
    def __init__(self, n: int, algorithm: int = nl.LD_SLSQP, verbose=False):
        """
        Bounded, inequality constrained maximization over ``n`` free variables, solved by nlopt.

        Objective and constraint functions take the nlopt form ``f(x, grad)`` and fill the
        gradient themselves when ``grad`` is not empty.

        Parameters
        ----------
        n: int
            Number of free variables

        algorithm: int
            nlopt algorithm code, Sequential Least Squares Quadratic Programming by default

        verbose: bool
            If True, logs the outcome of each run at INFO level
        """
        self._n = n
        self._model = nl.opt(algorithm, n)
        self._verbose = verbose

        self.set_xtol_rel(1e-8)
        self.set_ftol_rel(1e-10)
        self.set_maxeval(get_option('WBBG.POLISH.MAX_EVAL'))

        self.status: Optional[int] = None
        self.value: Optional[float] = None

    @property
    def model(self):
        """The underlying nlopt optimizer, for lower level settings"""
        return self._model

    @property
    def lower_bounds(self):
        return np.asarray(self._model.get_lower_bounds(), np.float64)

    @property
    def upper_bounds(self):
        return np.asarray(self._model.get_upper_bounds(), np.float64)

    def set_bounds(self, lb: Numeric, ub: Numeric):
        """
        Sets the lower and upper bounds. Scalars are propagated to every variable.

        Returns
        -------
        NloptProblem
            Own instance
        """
        self._model.set_lower_bounds(self._vector(lb))
        self._model.set_upper_bounds(self._vector(ub))
        return self

    def set_max_objective(self, fn: Callable[[np.ndarray, np.ndarray], float]):
        self._model.set_max_objective(fn)
        return self

    def add_inequality_constraint(self, fn: Callable[[np.ndarray, np.ndarray], float], tol=1e-10):
        """Adds the constraint ``fn(x) <= 0``"""
        self._model.add_inequality_constraint(fn, tol)
        return self

    def set_xtol_rel(self, tol: float):
        assert tol >= 0, "tolerance must be nonnegative"
        self._model.set_xtol_rel(float(tol))
        return self

    def set_ftol_rel(self, tol: float):
        assert tol >= 0, "tolerance must be nonnegative"
        self._model.set_ftol_rel(float(tol))
        return self

    def set_maxeval(self, n: int):
        assert isinstance(n, int), "max eval must be an integer"
        self._model.set_maxeval(n)
        return self

    def optimize(self, x0: Array) -> np.ndarray:
        """
        Runs the optimizer from ``x0``, clipped into the bounds.

        Returns
        -------
        ndarray
            Values of the free variables at the optimum, or NaNs if nlopt returned nothing.
            nlopt exceptions propagate to the caller.
        """
        x0 = np.clip(np.asarray(x0, dtype=float), self.lower_bounds, self.upper_bounds)
        sol = self._model.optimize(x0)
        self.status = self._model.last_optimize_result()
        self.value = self._model.last_optimum_value()

        if self._verbose:
            logger.info("nlopt finished with status %s, objective %.6g", self.status, self.value)
        if sol is None:
            return np.repeat(np.nan, self._n)
        return np.asarray(sol)

    def _vector(self, v: Numeric) -> np.ndarray:
        if np.isscalar(v):
            return np.repeat(float(v), self._n)
        v = np.asarray(v, dtype=float)
        assert v.shape == (self._n,), f"Input vector length must be {self._n}"
        return v


class EpigraphProblem(NloptProblem):
    def __init__(self, cfg: ArrayConfig, offsets: Array, theta: float, verbose=False):
        """
        Epigraph form of the max-min beam gain problem.

        The free variables are the phases of elements 1 to N - 1 (element 0 is the reference at
        phase 0) followed by the level t. The problem maximizes t subject to
        :math:`t \\leq |a(b_m, \\theta)^H w|^2 / N^2` for every carrier, with analytic gradients.

        Parameters
        ----------
        cfg: ArrayConfig
            Array geometry, at least 2 elements

        offsets: array_like
            Fractional offsets of the carriers

        theta: float
            User direction in radians

        verbose: bool
            If True, logs the outcome at INFO level
        """
        assert cfg.n_elements >= 2, "a single element has no free phase"
        super().__init__(cfg.n_elements, nl.LD_SLSQP, verbose)

        n = cfg.n_elements
        offsets = np.atleast_1d(np.asarray(offsets, dtype=float))
        phase = np.pi * (2 * cfg.element_spacing_fraction) * np.outer(1 + offsets, cfg.indices) \
            * np.sin(theta)
        # rows are conj(a(b_m)), so s = response @ w
        self._response = np.exp(1j * phase)
        self._scale = 1 / n ** 2

        self.set_max_objective(self._level)
        for m in range(len(offsets)):
            self.add_inequality_constraint(self._carrier_constraint(m))

    def normalized_gains(self, phases: Array) -> np.ndarray:
        s = self._response @ np.exp(1j * np.asarray(phases))
        return np.abs(s) ** 2 * self._scale

    def solve(self, phases: Array, radius: float = np.pi) -> Tuple[np.ndarray, float]:
        """
        Refines ``phases`` within ``radius`` of their starting values.

        Returns
        -------
        (ndarray, float)
            Refined phases (element 0 at 0) and their smallest normalized squared gain
        """
        phases = np.asarray(phases, dtype=float)
        phases = phases - phases[0]
        start = self.normalized_gains(phases).min()

        lb = np.append(phases[1:] - radius, 0.0)
        ub = np.append(phases[1:] + radius, 1.0)
        self.set_bounds(lb, ub)

        x = self.optimize(np.append(phases[1:], start))
        if np.any(np.isnan(x)):
            return phases, start
        refined = np.append(0.0, x[:-1])
        return refined, float(self.normalized_gains(refined).min())

    @staticmethod
    def _level(x, grad):
        if grad.size > 0:
            grad[:] = 0
            grad[-1] = 1
        return float(x[-1])

    def _carrier_constraint(self, m: int):
        row = self._response[m]
        scale = self._scale

        def constraint(x, grad):
            w = np.exp(1j * np.append(0.0, x[:-1]))
            terms = row * w
            s = terms.sum()
            if grad.size > 0:
                # d|s|^2/dφ_n = -2 Im(conj(s) row_n w_n)
                grad[:-1] = 2 * scale * np.imag(np.conj(s) * terms[1:])
                grad[-1] = 1
            return float(x[-1] - abs(s) ** 2 * scale)

        return constraint
