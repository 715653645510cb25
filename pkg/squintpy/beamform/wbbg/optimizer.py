import logging
from typing import List, NamedTuple, Optional, Tuple

import nlopt as nl
import numpy as np
from scipy.special import logsumexp, softmax

from squintpy._config import get_option
from squintpy.array import array_gain
from squintpy.beamform.weights import PhaseOnlyWeights, mrt_phases
from squintpy.core.geometry import ArrayConfig, CarrierGrid
from squintpy.exceptions import NotOptimizedError
from .problem import EpigraphProblem
from .solution import WbbgOptions, WbbgSolution
from .summary import WbbgSummary

__all__ = ["WbbgOptimizer", "wbbg_optimize"]

logger = logging.getLogger(__name__)


class RestartRecord(NamedTuple):
    restart: int
    start: str
    min_gain: float
    iterations: int
    converged: bool


class WbbgOptimizer:
    def __init__(self,
                 cfg: ArrayConfig,
                 grid: CarrierGrid,
                 theta_u: float,
                 options: Optional[WbbgOptions] = None,
                 verbose=False):
        """
        Wideband beam gain design: phase-only weights that maximize the smallest array gain over
        every carrier of the band, evaluated at the user direction.

        The hard minimum is replaced by a softmin of the normalized squared gains whose
        temperature is annealed towards 'WBBG.TEMP.END'. Each restart runs a projected gradient
        ascent on the unit-modulus manifold, with backtracking on the smoothed objective, and keeps
        the best hard minimum it visits. Restart 0 starts from the MRT weights, restart 1 from a
        quadratic phase profile that fans the beam over the squint range and further restarts
        from uniformly random phases.

        Parameters
        ----------
        cfg: ArrayConfig
            Array geometry

        grid: CarrierGrid
            Carriers over which the minimum is taken

        theta_u: float
            User direction in radians

        options: WbbgOptions, optional
            Optimizer settings. Unset fields take the 'WBBG.*' options

        verbose: bool
            If True, progress is logged at INFO level instead of DEBUG
        """
        self._cfg = cfg
        self._grid = grid
        self._theta = theta_u
        self._opts = (options or WbbgOptions()).resolved()
        self._log_level = logging.INFO if verbose else logging.DEBUG
        self._verbose = verbose

        n = cfg.n_elements
        phase = np.pi * (2 * cfg.element_spacing_fraction) \
            * np.outer(1 + grid.fractional_offsets, cfg.indices) * np.sin(theta_u)
        # rows are conj(a(b_m)), so the carrier responses are response @ w
        self._response = np.exp(1j * phase)
        self._scale = 1 / n ** 2

        self._solution: Optional[WbbgSolution] = None
        self._history: List[RestartRecord] = []

    @property
    def options(self) -> WbbgOptions:
        return self._opts

    @property
    def solution(self) -> WbbgSolution:
        if self._solution is None:
            raise NotOptimizedError
        return self._solution

    @property
    def history(self) -> List[RestartRecord]:
        """Outcome of every restart of the last run"""
        return list(self._history)

    def optimize(self) -> WbbgSolution:
        """
        Runs every restart and returns the best solution.

        The winner has the largest minimum gain, ties going to the lowest restart index, so the
        result never falls below the MRT weights and is reproducible for a given seed.

        Returns
        -------
        WbbgSolution
            Best weights found
        """
        self._history = []
        mrt = mrt_phases(self._cfg, self._theta)

        if self._grid.edge_offset == 0 or self._cfg.n_elements == 1:
            # MRT attains N on every carrier
            gains = self._carrier_gains(mrt)
            self._history.append(RestartRecord(0, 'mrt', float(gains.min()), 0, True))
            self._solution = WbbgSolution(mrt, float(gains.min()), gains, 0, True, self._opts.seed)
            return self._solution

        best: Optional[Tuple[np.ndarray, float, int, bool, int]] = None
        for r in range(self._opts.restarts):
            label, start = self._starting_point(r, mrt)
            phases, value, iterations, converged = self._ascend(start)
            min_gain = float(np.sqrt(value) * self._cfg.n_elements)
            self._history.append(RestartRecord(r, label, min_gain, iterations, converged))
            logger.log(self._log_level, "restart %d (%s): min gain %.6g after %d iterations%s",
                       r, label, min_gain, iterations, '' if converged else ' (not converged)')

            if best is None or value > best[1]:
                best = phases, value, iterations, converged, r

        phases, value, iterations, converged, restart = best
        if not converged:
            logger.warning("best restart %d did not converge within %d iterations", restart,
                           self._opts.max_iters)

        phases, polished = self._polish(phases, value)
        weights = PhaseOnlyWeights(phases - phases[0])
        gains = self._carrier_gains(weights)
        self._solution = WbbgSolution(weights=weights,
                                      min_gain=float(gains.min()),
                                      per_carrier_gain=gains,
                                      iterations=iterations,
                                      converged=converged,
                                      seed=self._opts.seed,
                                      restart=restart,
                                      polished=polished)
        return self._solution

    def summary(self) -> WbbgSummary:
        sol = self.solution
        return WbbgSummary(self._cfg, self._grid, self._theta, self._opts, sol, self.history,
                           self._carrier_gains(mrt_phases(self._cfg, self._theta)))

    def _carrier_gains(self, weights: PhaseOnlyWeights) -> np.ndarray:
        w = weights.as_complex()
        return np.array([array_gain(w, self._cfg, b, self._theta)
                         for b in self._grid.fractional_offsets])

    def _normalized_gains(self, w: np.ndarray) -> np.ndarray:
        return np.abs(self._response @ w) ** 2 * self._scale

    def _starting_point(self, restart: int, mrt: PhaseOnlyWeights) -> Tuple[str, np.ndarray]:
        n = self._cfg.n_elements
        if restart == 0:
            return 'mrt', mrt.phases_rad
        if restart == 1 and n >= 3:
            # wavefront slope swept linearly over the aperture between the two band edges
            idx = self._cfg.indices
            edge = self._grid.edge_offset
            profile = idx + edge * (idx ** 2 / (n - 1) - idx)
            return 'chirp', -np.pi * (2 * self._cfg.element_spacing_fraction) * profile \
                * np.sin(self._theta)

        rng = np.random.default_rng([self._opts.seed, restart])
        return 'random', rng.uniform(-np.pi, np.pi, n)

    def _ascend(self, phases: np.ndarray) -> Tuple[np.ndarray, float, int, bool]:
        opts = self._opts
        n = self._cfg.n_elements
        t_start, t_end = get_option('WBBG.TEMP.START'), get_option('WBBG.TEMP.END')
        decay = (t_end / t_start) ** (1 / max(1, int(0.6 * opts.max_iters)))

        def smoothed(g, temp):
            return -temp * logsumexp(-g / temp)

        w = np.exp(1j * phases)
        g = self._normalized_gains(w)
        best_w, best = w, g.min()
        temp, step = t_start, opts.step
        converged = False

        iteration = 0
        for iteration in range(1, opts.max_iters + 1):
            s = self._response @ w
            p = softmax(-g / temp)
            direction = self._response.conj().T @ (p * s) * self._scale
            # tangent component on the unit-modulus manifold
            direction -= np.real(direction * np.conj(w)) * w

            current = smoothed(g, temp)
            mu = step
            for _ in range(30):
                candidate = w + mu * n * direction
                candidate /= np.maximum(np.abs(candidate), 1e-300)
                g_new = self._normalized_gains(candidate)
                value = smoothed(g_new, temp)
                if value >= current:
                    break
                mu *= 0.5
            else:
                candidate, g_new, value = w, g, current

            w, g = candidate, g_new
            if g.min() > best:
                best_w, best = w, g.min()

            at_floor = temp <= t_end
            if at_floor and abs(value - current) <= opts.tolerance * max(1.0, abs(current)):
                converged = True
                break

            step = min(mu * 1.5, 4 * opts.step)
            temp = max(temp * decay, t_end)

        return np.angle(best_w * np.conj(best_w[0])), float(best), iteration, converged

    def _polish(self, phases: np.ndarray, value: float) -> Tuple[np.ndarray, bool]:
        n = self._cfg.n_elements
        if not (self._opts.polish and 2 <= n <= get_option('WBBG.POLISH.MAX_ELEMENTS')):
            return phases, False

        try:
            problem = EpigraphProblem(self._cfg, self._grid.fractional_offsets, self._theta,
                                      self._verbose)
            refined, refined_value = problem.solve(phases)
        except (nl.RoundoffLimited, RuntimeError, ValueError) as e:
            logger.warning("polish step failed, keeping the ascent solution: %s", e)
            return phases, False

        if refined_value > value * (1 + 1e-12):
            logger.log(self._log_level, "polish raised the normalized minimum from %.6g to %.6g",
                       value, refined_value)
            return refined, True

        logger.log(self._log_level, "polish did not improve the ascent solution")
        return phases, False


def wbbg_optimize(cfg: ArrayConfig,
                  grid: CarrierGrid,
                  theta_u: float,
                  opts: Optional[WbbgOptions] = None) -> WbbgSolution:
    """
    Max-min beam gain phases over the carriers of ``grid``.

    Functional form of :class:`WbbgOptimizer`.

    Parameters
    ----------
    cfg: ArrayConfig
        Array geometry

    grid: CarrierGrid
        Carriers

    theta_u: float
        User direction in radians

    opts: WbbgOptions, optional
        Restarts, iteration budget, tolerance and seed

    Returns
    -------
    WbbgSolution
        Best weights over the restarts; ``converged`` is False when the winning restart used up
        its iteration budget
    """
    return WbbgOptimizer(cfg, grid, theta_u, opts).optimize()
