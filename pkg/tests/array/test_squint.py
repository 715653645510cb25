import numpy as np
import pytest

from squintpy.array import beam_gain_map, squint_angle, squint_range
from squintpy.beamform import mrt_phases
from squintpy.core import ArrayConfig, CarrierGrid


def test_no_squint_at_design_frequency():
    theta0 = np.radians(60)
    s = squint_angle(theta0, 28e9, 28e9)
    assert s.angle_rad == theta0
    assert s.deviation_rad == 0
    assert not s.evanescent


@pytest.mark.parametrize("f, expected_deg", [
    (28e9 * 1.05, np.degrees(np.arcsin(np.sin(np.radians(60)) / 1.05))),
    (28e9 * 0.95, np.degrees(np.arcsin(np.sin(np.radians(60)) / 0.95))),
])
def test_squint_follows_frequency_ratio(f, expected_deg):
    assert squint_angle(np.radians(60), 28e9, f).angle_deg == pytest.approx(expected_deg)


def test_higher_frequencies_squint_towards_boresight():
    theta0 = np.radians(45)
    assert squint_angle(theta0, 28e9, 30e9).angle_rad < theta0
    assert squint_angle(theta0, 28e9, 26e9).angle_rad > theta0
    assert squint_angle(-theta0, 28e9, 30e9).angle_rad > -theta0


def test_boresight_never_squints():
    assert squint_angle(0.0, 28e9, 40e9).angle_rad == 0.0


def test_evanescent_direction_is_clamped_to_endfire():
    s = squint_angle(np.radians(80), 28e9, 20e9)
    assert s.evanescent
    assert s.angle_rad == pytest.approx(np.pi / 2)

    s = squint_angle(np.radians(-80), 28e9, 20e9)
    assert s.evanescent and s.angle_rad == pytest.approx(-np.pi / 2)


def test_nonpositive_frequency_raises():
    with pytest.raises(ValueError):
        squint_angle(0.3, 28e9, 0.0)


def test_squint_range_spans_band_edges():
    grid = CarrierGrid(16, 2.8e9, 28e9)
    lo, hi = squint_range(np.radians(60), grid)
    assert lo == pytest.approx(squint_angle(np.radians(60), 28e9, 29.4e9).angle_rad)
    assert hi == pytest.approx(squint_angle(np.radians(60), 28e9, 26.6e9).angle_rad)
    assert lo < np.radians(60) < hi


def test_squint_range_is_odd_in_the_user_direction():
    grid = CarrierGrid(16, 2.8e9, 28e9)
    lo, hi = squint_range(np.radians(60), grid)
    mlo, mhi = squint_range(np.radians(-60), grid)
    assert mlo == pytest.approx(-hi)
    assert mhi == pytest.approx(-lo)
    assert mlo < np.radians(-60) < mhi


@pytest.mark.parametrize("theta0_deg", [10, 45, 60, 85])
def test_squint_decreases_strictly_with_frequency(theta0_deg):
    theta0 = np.radians(theta0_deg)
    angles = np.array([squint_angle(theta0, 28e9, f).angle_rad
                       for f in np.linspace(28e9 * 1.001, 60e9, 200)])
    assert np.all(np.diff(angles) < 0)

    mirrored = np.array([squint_angle(-theta0, 28e9, f).angle_rad
                         for f in np.linspace(28e9 * 1.001, 60e9, 200)])
    assert np.all(np.diff(mirrored) > 0)


@pytest.mark.parametrize("theta0_deg, b", [(60, 0.1), (60, -0.05), (30, 0.2), (-45, 0.1)])
def test_squinted_direction_is_the_peak_of_center_mrt(theta0_deg, b):
    cfg = ArrayConfig(64, 28e9)
    theta0 = np.radians(theta0_deg)
    angles = np.radians(np.arange(-90, 90.0025, 0.005))

    gains = beam_gain_map(mrt_phases(cfg, theta0).as_complex(), cfg, [b], angles)[0]
    peak = np.degrees(angles[np.argmax(gains)])
    assert peak == pytest.approx(squint_angle(theta0, 28e9, 28e9 * (1 + b)).angle_deg, abs=0.01)
