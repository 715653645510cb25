import numpy as np
import pytest
from numpy.testing import assert_allclose

from squintpy.beamform import (
    DelayWeights, PhaseOnlyWeights, full_ttd_delays, mrt_phases, quantize_delays, quantize_phases,
    wrap_phase
)
from squintpy.core import ArrayConfig, CarrierGrid
from squintpy.exceptions import DelayRangeError
from squintpy.linkchan import find_device
from squintpy.datasets import load_devices


def test_wrap_phase_range():
    x = np.array([-np.pi, np.pi, 3 * np.pi, -3.5 * np.pi, 0.1, 7.0])
    w = wrap_phase(x)
    assert np.all(w > -np.pi) and np.all(w <= np.pi)
    assert_allclose(np.exp(1j * w), np.exp(1j * x), atol=1e-12)
    assert w[0] == pytest.approx(np.pi)


def test_phase_weights_are_read_only():
    w = PhaseOnlyWeights([0.0, 4.0])
    assert w.phases_rad[1] == pytest.approx(4.0 - 2 * np.pi)
    with pytest.raises(ValueError):
        w.phases_rad[0] = 1.0


@pytest.mark.parametrize("theta_deg", [-60, 0, 25, 60])
def test_mrt_reaches_n_at_center_carrier(theta_deg):
    cfg = ArrayConfig(32, 28e9)
    theta = np.radians(theta_deg)
    w = mrt_phases(cfg, theta)
    assert w.gain(cfg, 0.0, theta) == pytest.approx(32)
    assert w.phases_rad[0] == 0


@pytest.mark.parametrize("theta_deg", [-45, 60])
def test_full_ttd_removes_squint(theta_deg):
    cfg = ArrayConfig(64, 28e9)
    grid = CarrierGrid(16, 0.3 * 28e9, 28e9)
    theta = np.radians(theta_deg)
    ttd = full_ttd_delays(cfg, theta)

    gains = np.array([ttd.gain(cfg, b, theta) for b in grid.fractional_offsets])
    assert gains.max() - gains.min() <= 1e-9 * 64
    assert_allclose(gains, 64)
    assert ttd.delays_s.min() == 0
    assert ttd.max_delay_s == pytest.approx(63 * 0.5 / 28e9)


def test_delay_range_error():
    cfg = ArrayConfig(64, 28e9)
    with pytest.raises(DelayRangeError, match="ps"):
        full_ttd_delays(cfg, np.radians(60), max_delay_s=254e-12)

    # ADAR4002: 254 ps covers a 16 element array at 28 GHz
    adar = find_device('ADAR4002 (Analog Devices)', load_devices())
    ttd = full_ttd_delays(ArrayConfig(16, 28e9), np.radians(60), adar.delay_range_s)
    assert ttd.max_delay_s == adar.delay_range_s


def test_quantize_phases():
    w = PhaseOnlyWeights([0.0, 0.3, -1.2, 2.9])
    q = quantize_phases(w, 2)
    assert_allclose(np.exp(1j * q.phases_rad), np.exp(1j * np.array([0, 0, -np.pi / 2, np.pi])),
                    atol=1e-12)
    assert quantize_phases(w, "continuous") is w

    q = quantize_phases(w, 10)
    assert np.max(np.abs(q.phases_rad - w.phases_rad)) <= np.pi / 2 ** 10 + 1e-12


def test_quantize_delays():
    w = DelayWeights([0.0, 10e-12, 23e-12, 40e-12], 40e-12)
    q = quantize_delays(w, 2, 30e-12)
    assert_allclose(q.delays_s, [0.0, 10e-12, 20e-12, 30e-12])
    assert q.max_delay_s == 30e-12
    assert quantize_delays(w, "continuous", 30e-12) is w


def test_quantize_rejects_bad_bit_count():
    with pytest.raises(AssertionError):
        quantize_phases(PhaseOnlyWeights([0.0]), 0)


def test_delay_weights_realize_linear_phase():
    cfg = ArrayConfig(4, 28e9)
    w = DelayWeights([0.0, 1e-12, 2e-12, 3e-12], 3e-12)
    z = w.as_complex(cfg, 0.1)
    assert_allclose(np.abs(z), 1)
    assert np.angle(z[1] / z[0]) == pytest.approx(-2 * np.pi * 28e9 * 1.1 * 1e-12)
