import numpy as np

from squintpy.core.hardware import ImpairmentModel
from squintpy.types import Numeric

__all__ = ["impairment_factor"]


def impairment_factor(model: ImpairmentModel, b: Numeric, b_edge: float):
    """
    Efficiency E(b) of the phase shifter network at fractional offset b.

    E is 1 at the center carrier and falls to the model's edge loss at ``|b| = b_edge``. The
    'linear_db' and 'device' kinds ramp the loss linearly in dB, the 'linear_amplitude' kind ramps
    the amplitude linearly between 1 and the same edge value.

    Parameters
    ----------
    model: ImpairmentModel
        Impairment description

    b: float or array_like
        Fractional offset(s) of the carrier(s)

    b_edge: float
        Fractional offset of the band edge, B / (2 f0)

    Returns
    -------
    float or ndarray
        Efficiency in (0, 1], same shape as ``b``

    Raises
    ------
    ValueError
        If any ``|b|`` exceeds ``b_edge``

    Examples
    --------
    >>> from squintpy.linkchan import ImpairmentModel, impairment_factor
    >>> round(impairment_factor(ImpairmentModel('linear_db', 6.0), 0.1, 0.1), 4)
    0.2512
    """
    b = np.asarray(b, dtype=float)
    mag = np.abs(b)
    if b_edge == 0 or model.kind == 'ideal':
        if b_edge == 0 and np.any(mag > 0):
            raise ValueError("carrier offset exceeds the band edge offset of 0")
        e = np.ones_like(mag)
    else:
        if np.any(mag > b_edge * (1 + 1e-12)):
            raise ValueError(f"carrier offset {mag.max():g} exceeds the band edge offset "
                             f"{b_edge:g}")
        ratio = np.minimum(mag / b_edge, 1.0)
        edge_db = model.effective_edge_loss_db
        if model.kind == 'linear_amplitude':
            edge_amplitude = 10 ** (-edge_db / 20)
            e = (1 - (1 - edge_amplitude) * ratio) ** 2
        else:
            e = 10 ** (-(edge_db * ratio) / 10)

    return float(e) if e.ndim == 0 else e
