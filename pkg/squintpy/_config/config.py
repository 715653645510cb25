from contextlib import contextmanager

_global_config = {
    'EPS.CROSSOVER': 1e-6,  # relative tolerance of the cost crossover bisection
    'EPS.GAIN': 1e-12,  # |Δ_b| below which the closed-form gain takes its limit N
    'SWEEP.WORKERS': 1,
    'WBBG.MAX_ITERS': 500,
    'WBBG.POLISH': True,
    'WBBG.POLISH.MAX_ELEMENTS': 64,
    'WBBG.POLISH.MAX_EVAL': 200,
    'WBBG.RESTARTS': 4,
    'WBBG.STEP': 0.5,
    'WBBG.TEMP.END': 1e-3,
    'WBBG.TEMP.START': 0.1,
    'WBBG.TOLERANCE': 1e-9,
}


def get_option(key):
    """
    Retrieves the value of the specified option.

    Parameters
    ----------
    key: str
        Name of the option

    Returns
    -------
    result: float, int or bool
        Value of the option

    Raises
    ------
    KeyError:
        Configuration specified by the key does not exist

    Examples
    --------
    >>> from squintpy import get_option
    >>> get_option('WBBG.RESTARTS')
    4
    """
    key = key.upper()
    if key not in _global_config:
        raise KeyError(f"Configuration {key} does not exist.")
    return _global_config[key]


def set_option(key, value):
    """
    Sets the value of the specified option

    Parameters
    ----------
    key: str
        Name of the option

    value: float, int or bool
        Value to set option as

    Notes
    -----
    The available options with its descriptions

    EPS.CROSSOVER
        Relative tolerance used when bisecting pairwise cost differences for the crossover
        thresholds

    EPS.GAIN
        Magnitude of the half-offset term below which the closed-form narrowband gain returns
        its limit value N

    SWEEP.WORKERS
        Number of threads used by the fractional bandwidth sweep. The ``SQUINTPY_WORKERS``
        environment variable overrides it for command line runs

    WBBG.MAX_ITERS
        Maximum number of ascent iterations per restart of the wideband beam gain optimizer

    WBBG.POLISH
        If True, the best restart is refined with nlopt's SLSQP on the epigraph problem

    WBBG.POLISH.MAX_ELEMENTS
        Largest array for which the polish step runs

    WBBG.POLISH.MAX_EVAL
        Evaluation budget of the polish step

    WBBG.RESTARTS
        Number of starting points. Restart 0 is always the MRT solution

    WBBG.STEP
        Initial step size of the projected gradient ascent

    WBBG.TEMP.START, WBBG.TEMP.END
        Softmin temperature at the first iteration and its floor

    WBBG.TOLERANCE
        Change in the smoothed objective below which a restart counts as converged

    Examples
    --------
    >>> from squintpy import set_option
    >>> set_option('WBBG.RESTARTS', 8)  # ok
    >>> try:
    ...     set_option('KEY_DOES_NOT_EXIST', 123)
    ... except KeyError:
    ...     pass  # raises key error
    >>> set_option('WBBG.RESTARTS', 4)
    """
    _global_config.update(_validated_key_value(key, value))


@contextmanager
def option_context(options: dict):
    """
    Temporarily sets options within a ``with`` block, restoring the previous values on exit.

    Parameters
    ----------
    options: dict
        Mapping of option name to value

    Examples
    --------
    >>> from squintpy import get_option, option_context
    >>> with option_context({'WBBG.RESTARTS': 2}):
    ...     get_option('WBBG.RESTARTS')
    2
    """
    previous = {key.upper(): get_option(key) for key in options}
    try:
        for key, value in options.items():
            set_option(key, value)
        yield
    finally:
        _global_config.update(previous)


def _validated_key_value(key: str, value):
    key = key.upper()
    if key not in _global_config:
        raise KeyError(f"Configuration {key} does not exist.")

    if key in {'EPS.CROSSOVER', 'EPS.GAIN', 'WBBG.STEP', 'WBBG.TEMP.END', 'WBBG.TEMP.START',
               'WBBG.TOLERANCE'}:
        assert isinstance(value, (int, float)) and not isinstance(value, bool) and value > 0, \
            "value must be a positive number"
    elif key in {'SWEEP.WORKERS', 'WBBG.MAX_ITERS', 'WBBG.POLISH.MAX_ELEMENTS',
                 'WBBG.POLISH.MAX_EVAL', 'WBBG.RESTARTS'}:
        assert isinstance(value, int) and not isinstance(value, bool) and value >= 1, \
            "value must be a positive integer"
    elif key in {'WBBG.POLISH'}:
        assert isinstance(value, bool), "value must be a boolean"

    return {key: value}
