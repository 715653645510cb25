from itertools import product
from typing import Tuple

import numpy as np

from squintpy.core.geometry import ArrayConfig, CarrierGrid
from .weights import PhaseOnlyWeights

__all__ = ["exhaustive_phase_search"]


def exhaustive_phase_search(cfg: ArrayConfig,
                            grid: CarrierGrid,
                            theta_u: float,
                            levels: int = 16,
                            chunk: int = 4096) -> Tuple[PhaseOnlyWeights, float]:
    """
    Max-min beam gain by enumerating every quantized phase vector.

    Element 0 stays at phase 0, the other N - 1 elements take one of ``levels`` equally spaced
    phases, so ``levels ** (N - 1)`` candidates are scored. Only practical for very small arrays.

    Parameters
    ----------
    cfg: ArrayConfig
        Array geometry

    grid: CarrierGrid
        Carriers over which the minimum is taken

    theta_u: float
        User direction in radians

    levels: int
        Number of phase levels per element

    chunk: int
        Candidates scored per batch

    Returns
    -------
    (PhaseOnlyWeights, float)
        Best quantized weights and their minimum array gain
    """
    n = cfg.n_elements
    assert n >= 2, "element 0 is fixed, so at least 2 elements are needed"
    assert levels ** (n - 1) <= 2 ** 24, "search space too large for exhaustive enumeration"

    alphabet = np.exp(2j * np.pi * np.arange(levels) / levels)
    phase = np.pi * (2 * cfg.element_spacing_fraction) \
        * np.outer(1 + grid.fractional_offsets, cfg.indices) * np.sin(theta_u)
    response = np.exp(1j * phase)

    best_index, best_gain = (0,) * (n - 1), -1.0
    combos = product(range(levels), repeat=n - 1)
    while True:
        batch = np.array([c for _, c in zip(range(chunk), combos)], dtype=int)
        if batch.size == 0:
            break
        batch = batch.reshape(len(batch), n - 1)
        w = np.hstack([np.ones((len(batch), 1)), alphabet[batch]])
        gains = np.abs(w @ response.T).min(axis=1)
        i = int(np.argmax(gains))
        if gains[i] > best_gain:
            best_index, best_gain = tuple(batch[i]), float(gains[i])

    phases = np.append(0.0, 2 * np.pi * np.asarray(best_index, dtype=float) / levels)
    return PhaseOnlyWeights(phases), best_gain
