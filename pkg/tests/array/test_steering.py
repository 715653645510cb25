import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from numpy.testing import assert_allclose

from squintpy.array import array_gain, beam_gain_map, narrowband_gain_closed_form, steering_vector
from squintpy.beamform import mrt_phases
from squintpy.core import ArrayConfig
from squintpy.exceptions import DimensionMismatchError, UnsupportedGeometryError


def test_closed_form_matches_explicit_gain_on_random_cases():
    rng = np.random.default_rng(2024)
    for _ in range(500):
        n = int(rng.integers(1, 65))
        b = rng.uniform(-0.25, 0.25)
        theta = np.radians(rng.uniform(-89, 89))
        cfg = ArrayConfig(n, 28e9)

        explicit = array_gain(mrt_phases(cfg, theta).as_complex(), cfg, b, theta)
        assert abs(narrowband_gain_closed_form(cfg, b, theta) - explicit) <= 1e-9 * n


@pytest.mark.parametrize("n, b, theta", [
    (64, 0.0, np.radians(60)),
    (16, 0.1, 0.0),
    (1, 0.2, np.radians(30)),
    (32, 1e-14, np.radians(45)),
])
def test_closed_form_limit_is_n(n, b, theta):
    assert narrowband_gain_closed_form(ArrayConfig(n, 28e9), b, theta) == n


def test_closed_form_reference_value():
    value = narrowband_gain_closed_form(ArrayConfig(4, 28e9), 0.1, np.radians(60))
    delta = 0.05 * np.sin(np.radians(60))
    assert value == pytest.approx(abs(np.sin(4 * np.pi * delta) / np.sin(np.pi * delta)))
    assert value == pytest.approx(3.8173, abs=1e-4)


def test_closed_form_needs_half_wavelength_spacing():
    with pytest.raises(UnsupportedGeometryError):
        narrowband_gain_closed_form(ArrayConfig(8, 28e9, 0.4), 0.1, 0.3)


@given(n=st.integers(1, 64), b=st.floats(-0.5, 0.5), theta=st.floats(-1.5, 1.5),
       phases=st.lists(st.floats(-np.pi, np.pi), min_size=64, max_size=64))
@settings(max_examples=100, deadline=None)
def test_phase_only_gain_is_bounded_by_n(n, b, theta, phases):
    cfg = ArrayConfig(n, 28e9)
    w = np.exp(1j * np.asarray(phases[:n]))
    assert 0 <= array_gain(w, cfg, b, theta) <= n * (1 + 1e-12)


def test_steering_vector_is_unit_modulus_with_reference_element():
    a = steering_vector(ArrayConfig(8, 28e9), 0.05, 0.7)
    assert_allclose(np.abs(a), 1)
    assert a[0] == 1


def test_weight_length_must_match():
    cfg = ArrayConfig(8, 28e9)
    with pytest.raises(DimensionMismatchError):
        array_gain(np.ones(7), cfg, 0.0, 0.0)
    with pytest.raises(DimensionMismatchError):
        beam_gain_map(np.ones(9), cfg, [0.0], [0.0])


def test_beam_gain_map_matches_array_gain():
    cfg = ArrayConfig(12, 28e9)
    w = mrt_phases(cfg, np.radians(40)).as_complex()
    offsets = [-0.1, 0.0, 0.07]
    angles = np.radians([-80, -10, 0, 40, 65])

    gains = beam_gain_map(w, cfg, offsets, angles)
    assert gains.shape == (3, 5)
    for i, b in enumerate(offsets):
        for j, theta in enumerate(angles):
            assert gains[i, j] == pytest.approx(array_gain(w, cfg, b, theta), abs=1e-9)
    assert gains[1, 3] == pytest.approx(12)
