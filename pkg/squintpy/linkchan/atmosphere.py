from functools import lru_cache
from typing import Tuple

import numpy as np

from squintpy.core.hardware import LinkModel
from squintpy.datasets import load_atmosphere_table
from squintpy.exceptions import FrequencyRangeError, ScenarioError
from squintpy.types import Numeric

__all__ = ["atmospheric_specific_attenuation", "attenuation_table_range"]

_TABLE_ATMOSPHERE = (15.0, 101300.0, 7.5)


@lru_cache(maxsize=1)
def _table() -> Tuple[np.ndarray, np.ndarray]:
    table = load_atmosphere_table()
    freq = table['frequency_ghz'].to_numpy() * 1e9
    alpha = table['attenuation_db_per_km'].to_numpy()
    freq.setflags(write=False)
    alpha.setflags(write=False)
    return freq, alpha


def attenuation_table_range() -> Tuple[float, float]:
    """Lowest and highest frequency, in Hz, covered by the attenuation table"""
    freq, _ = _table()
    return float(freq[0]), float(freq[-1])


def atmospheric_specific_attenuation(f: Numeric, link: LinkModel = None):
    """
    Specific attenuation by atmospheric gases, in dB/km.

    Values are linearly interpolated on the bundled table, so they are exact at the table
    nodes and always lie between the two neighbouring node values.

    Parameters
    ----------
    f: float or array_like
        Frequency in Hz

    link: LinkModel, optional
        Link whose atmosphere is looked up. The table is sampled at 15 C, 101300 Pa and 7.5 g/m3,
        which is the only atmosphere accepted

    Returns
    -------
    float or ndarray
        Nonnegative attenuation in dB/km

    Raises
    ------
    FrequencyRangeError
        Any frequency lies outside the table
    """
    if link is not None and (link.temperature_c, link.pressure_pa,
                             link.water_vapor_g_m3) != _TABLE_ATMOSPHERE:
        raise ScenarioError("the bundled attenuation table is only valid at 15 C, 101300 Pa and "
                            "7.5 g/m3 water vapour")

    freq, alpha = _table()
    f = np.asarray(f, dtype=float)
    outside = (f < freq[0]) | (f > freq[-1])
    if np.any(outside):
        raise FrequencyRangeError(float(np.atleast_1d(f)[np.atleast_1d(outside)][0]),
                                  freq[0], freq[-1])

    result = np.interp(f, freq, alpha)
    return float(result) if result.ndim == 0 else result
