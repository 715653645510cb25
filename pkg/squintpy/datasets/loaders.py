from typing import List

import pandas as pd

from squintpy.core.hardware import DeviceSpec
from squintpy.linkchan.catalog import load_device_catalog
from ._base import filepath

__all__ = ["load_atmosphere_table", "load_devices"]


def load_atmosphere_table() -> pd.DataFrame:
    """
    Specific attenuation by atmospheric gases between 1 and 300 GHz.

    The curve is sampled at sea level for a 15 C, 101300 Pa atmosphere carrying 7.5 g/m3 of water
    vapour and resolves the oxygen complex around 60 GHz, the oxygen line at 118.75 GHz and the
    water vapour lines at 22.235 and 183.31 GHz.

    Returns
    -------
    DataFrame
        Columns 'frequency_ghz' (strictly increasing) and 'attenuation_db_per_km'
    """
    table = pd.read_csv(filepath('atmosphere.txt'), sep=r'\s+', comment='#', header=None,
                        names=['frequency_ghz', 'attenuation_db_per_km'], dtype=float)
    assert table['frequency_ghz'].is_monotonic_increasing and table['frequency_ghz'].is_unique, \
        "attenuation table frequencies must be strictly increasing"
    return table


def load_devices() -> List[DeviceSpec]:
    """
    Representative wideband phase shifters and true-time-delay units.

    Six entries: three electrical phase shifters (one of them for the 75-110 GHz band), two
    electrical TTD chips and a photonic TTD covering 53-120 GHz.

    Returns
    -------
    list of DeviceSpec
        Catalog entries in file order
    """
    with open(filepath('devices.csv'), 'rb') as f:
        return load_device_catalog(f)
