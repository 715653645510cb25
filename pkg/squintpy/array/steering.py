import numpy as np

from squintpy._config import get_option
from squintpy.core.geometry import ArrayConfig
from squintpy.exceptions import DimensionMismatchError, UnsupportedGeometryError
from squintpy.types import Array

__all__ = ["array_gain", "beam_gain_map", "narrowband_gain_closed_form", "steering_vector"]


def steering_vector(cfg: ArrayConfig, b: float, theta: float) -> np.ndarray:
    """
    Response of the array to a plane wave arriving from ``theta`` at carrier ``f0 (1 + b)``.

    Element n carries the phase :math:`-\\pi (1 + b) (2 s) n \\sin\\theta` where s is the
    element spacing in center-frequency wavelengths. Element 0 is the phase reference.

    Parameters
    ----------
    cfg: ArrayConfig
        Array geometry

    b: float
        Fractional offset of the carrier, ``|b| < 1``

    theta: float
        Angle from boresight in radians

    Returns
    -------
    ndarray
        Unit modulus complex vector of length N
    """
    assert abs(b) < 1, "fractional offset must lie in (-1, 1)"
    phase = -np.pi * (1 + b) * (2 * cfg.element_spacing_fraction) * cfg.indices * np.sin(theta)
    return np.exp(1j * phase)


def array_gain(w: Array, cfg: ArrayConfig, b: float, theta: float) -> float:
    """
    Array gain :math:`|a(b, \\theta)^H w|` of weights ``w``.

    Parameters
    ----------
    w: array_like
        Complex weights, one per element

    cfg: ArrayConfig
        Array geometry

    b: float
        Fractional offset of the carrier

    theta: float
        Angle in radians

    Returns
    -------
    float
        Nonnegative gain, at most the sum of the weight magnitudes

    Raises
    ------
    DimensionMismatchError
        If the weight vector length differs from the number of elements
    """
    w = np.asarray(w, dtype=complex)
    if w.shape != (cfg.n_elements,):
        raise DimensionMismatchError(f"expected {cfg.n_elements} weights, got shape {w.shape}")
    return float(np.abs(np.vdot(steering_vector(cfg, b, theta), w)))


def beam_gain_map(w: Array, cfg: ArrayConfig, offsets: Array, angles: Array) -> np.ndarray:
    """
    Gain of ``w`` over a grid of carriers and directions.

    Returns
    -------
    ndarray
        Matrix of shape (len(offsets), len(angles)) whose entry [i, j] is
        ``array_gain(w, cfg, offsets[i], angles[j])``
    """
    w = np.asarray(w, dtype=complex)
    if w.shape != (cfg.n_elements,):
        raise DimensionMismatchError(f"expected {cfg.n_elements} weights, got shape {w.shape}")
    offsets = np.atleast_1d(np.asarray(offsets, dtype=float))
    angles = np.atleast_1d(np.asarray(angles, dtype=float))

    # phase[i, j, n] of the conjugated steering vector
    u = (1 + offsets)[:, None] * np.sin(angles)[None, :]
    phase = np.pi * (2 * cfg.element_spacing_fraction) * u[..., None] * cfg.indices
    return np.abs(np.exp(1j * phase) @ w)


def narrowband_gain_closed_form(cfg: ArrayConfig, b: float, theta: float) -> float:
    """
    Gain at offset ``b`` of half-wavelength MRT weights steered to ``theta`` at the center carrier.

    .. math::

        G_{NB}(b, \\theta) = \\left| \\frac{\\sin(N \\pi \\Delta_b)}
                                    {\\sin(\\pi \\Delta_b)} \\right|,
        \\quad \\Delta_b = \\frac{b}{2} \\sin\\theta

    The limit N is returned when :math:`|\\Delta_b|` is below the 'EPS.GAIN' option.

    Raises
    ------
    UnsupportedGeometryError
        If the element spacing is not half a wavelength. Use :func:`array_gain` then.

    Examples
    --------
    >>> from squintpy.core import ArrayConfig
    >>> round(narrowband_gain_closed_form(ArrayConfig(4, 28e9), 0.1, np.radians(60)), 3)
    3.817
    """
    if cfg.element_spacing_fraction != 0.5:
        raise UnsupportedGeometryError("closed-form narrowband gain assumes half-wavelength "
                                       f"spacing, got {cfg.element_spacing_fraction} wavelengths")
    delta = b / 2 * np.sin(theta)
    if abs(delta) < get_option('EPS.GAIN'):
        return float(cfg.n_elements)
    return float(abs(np.sin(cfg.n_elements * np.pi * delta) / np.sin(np.pi * delta)))
