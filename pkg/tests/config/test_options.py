import pytest

from squintpy import get_option, option_context, set_option


@pytest.mark.parametrize("key, expected", [
    ('WBBG.RESTARTS', 4),
    ('wbbg.max_iters', 500),
    ('EPS.CROSSOVER', 1e-6),
    ('Eps.Gain', 1e-12),
    ('SWEEP.WORKERS', 1),
    ('WBBG.POLISH', True),
])
def test_get_option_defaults(key, expected):
    assert get_option(key) == expected


def test_unknown_option_raises():
    with pytest.raises(KeyError):
        get_option('WBBG.DOES_NOT_EXIST')

    with pytest.raises(KeyError):
        set_option('WBBG.DOES_NOT_EXIST', 1)


@pytest.mark.parametrize("key, value", [
    ('WBBG.RESTARTS', 0),
    ('WBBG.RESTARTS', 2.5),
    ('WBBG.RESTARTS', True),
    ('WBBG.STEP', -1.0),
    ('EPS.CROSSOVER', 0),
    ('WBBG.POLISH', 1),
])
def test_set_option_rejects_invalid_values(key, value):
    before = get_option(key)
    with pytest.raises(AssertionError):
        set_option(key, value)
    assert get_option(key) == before


def test_set_option_round_trip():
    set_option('wbbg.restarts', 7)
    try:
        assert get_option('WBBG.RESTARTS') == 7
    finally:
        set_option('WBBG.RESTARTS', 4)


def test_option_context_restores_values():
    with option_context({'WBBG.RESTARTS': 2, 'wbbg.polish': False}):
        assert get_option('WBBG.RESTARTS') == 2
        assert get_option('WBBG.POLISH') is False
    assert get_option('WBBG.RESTARTS') == 4
    assert get_option('WBBG.POLISH') is True


def test_option_context_restores_on_error():
    with pytest.raises(RuntimeError):
        with option_context({'SWEEP.WORKERS': 3}):
            raise RuntimeError("boom")
    assert get_option('SWEEP.WORKERS') == 1
