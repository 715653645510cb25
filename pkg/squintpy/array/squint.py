from typing import NamedTuple, Tuple

import numpy as np

from squintpy.core.geometry import CarrierGrid

__all__ = ["SquintAngle", "squint_angle", "squint_range"]


class SquintAngle(NamedTuple):
    angle_rad: float
    reference_rad: float
    evanescent: bool

    @property
    def deviation_rad(self) -> float:
        return self.angle_rad - self.reference_rad

    @property
    def angle_deg(self) -> float:
        return float(np.degrees(self.angle_rad))


def squint_angle(theta0: float, f0: float, f: float) -> SquintAngle:
    """
    Main lobe direction at frequency ``f`` of phase-only weights steered to ``theta0`` at ``f0``.

    Solves :math:`\\sin\\theta(f) = (f_0 / f) \\sin\\theta_0`. When no real solution exists the
    direction is clamped to endfire on the side of ``theta0`` and flagged as evanescent.

    Parameters
    ----------
    theta0: float
        Steering angle in radians at the design frequency

    f0: float
        Design frequency in Hz

    f: float
        Operating frequency in Hz

    Returns
    -------
    SquintAngle
        Squinted direction, the reference direction and the evanescent flag

    Raises
    ------
    ValueError
        If either frequency is not positive
    """
    if not (f > 0 and f0 > 0):
        raise ValueError(f"frequencies must be positive, got f0={f0} and f={f}")

    if f == f0:
        return SquintAngle(float(theta0), theta0, False)

    s = f0 / f * np.sin(theta0)
    if abs(s) > 1:
        return SquintAngle(float(np.copysign(np.pi / 2, theta0)), theta0, True)
    return SquintAngle(float(np.arcsin(s)), theta0, False)


def squint_range(theta_u: float, grid: CarrierGrid) -> Tuple[float, float]:
    """
    Angular spread of the beam over the band.

    Returns
    -------
    (float, float)
        Smallest and largest squinted direction in radians, reached at the two band edges
    """
    f0 = grid.center_frequency_hz
    edge = grid.edge_offset
    upper = squint_angle(theta_u, f0, f0 * (1 + edge)).angle_rad
    lower = squint_angle(theta_u, f0, f0 * (1 - edge)).angle_rad
    return min(upper, lower), max(upper, lower)
