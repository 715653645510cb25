import io
import re
from os import PathLike
from typing import BinaryIO, Iterable, List, Optional, Union

import numpy as np
import pandas as pd

from squintpy.core.hardware import DeviceSpec, ImpairmentModel
from squintpy.exceptions import CatalogError

__all__ = ["CATALOG_COLUMNS", "device_impairment", "dump_device_catalog", "find_device",
           "load_device_catalog"]

CATALOG_COLUMNS = ['name', 'kind', 'resolution_bits', 'freq_min_ghz', 'freq_max_ghz',
                   'delay_range_ps', 'max_phase_error_deg', 'max_delay_error_ps', 'loss_min_db',
                   'loss_max_db']

_REQUIRED = ['name', 'kind', 'resolution_bits', 'freq_min_ghz', 'freq_max_ghz', 'loss_min_db',
             'loss_max_db']


def load_device_catalog(source: Union[BinaryIO, str, PathLike]) -> List[DeviceSpec]:
    """
    Parses a device catalog.

    The catalog is a UTF-8 CSV file with a header row naming the columns in ``CATALOG_COLUMNS``.
    Frequencies are in GHz, delays in ps and losses in dB. Optional cells may be left empty.

    Parameters
    ----------
    source: binary file or path
        Catalog contents

    Returns
    -------
    list of DeviceSpec
        Devices in file order. An empty file gives an empty list

    Raises
    ------
    CatalogError
        The file cannot be parsed (the message carries the line number) or a device breaks an
        invariant (the message names the device)
    """
    if isinstance(source, (str, PathLike)):
        with open(source, 'rb') as f:
            return load_device_catalog(f)

    raw = source.read()
    if not raw.strip():
        return []

    try:
        table = pd.read_csv(io.BytesIO(raw), dtype=str, keep_default_na=False, encoding='utf-8',
                            skipinitialspace=True)
    except pd.errors.ParserError as e:
        match = re.search(r'line (\d+)', str(e))
        raise CatalogError(str(e), line=int(match.group(1)) if match else None) from e
    except UnicodeDecodeError as e:
        raise CatalogError(f"catalog is not valid UTF-8: {e}") from e

    missing = [c for c in _REQUIRED if c not in table.columns]
    if missing:
        raise CatalogError(f"missing columns: {', '.join(missing)}", line=1)

    devices = []
    for i, row in enumerate(table.itertuples(index=False)):
        # header is line 1
        devices.append(_parse_row(row._asdict(), line=i + 2).check())
    return devices


def dump_device_catalog(devices: Iterable[DeviceSpec]) -> pd.DataFrame:
    """Tabulates devices in catalog units, with the catalog's column names"""
    rows = []
    for d in devices:
        rows.append({
            'name': d.name,
            'kind': d.kind,
            'resolution_bits': d.resolution_bits,
            'freq_min_ghz': d.freq_range_hz[0] / 1e9,
            'freq_max_ghz': d.freq_range_hz[1] / 1e9,
            'delay_range_ps': _or_nan(d.delay_range_s, 1e12),
            'max_phase_error_deg': _or_nan(d.max_phase_error_deg),
            'max_delay_error_ps': _or_nan(d.max_delay_error_s, 1e12),
            'loss_min_db': d.insertion_loss_db[0],
            'loss_max_db': d.insertion_loss_db[1],
        })
    return pd.DataFrame(rows, columns=CATALOG_COLUMNS)


def find_device(name: str, devices: Iterable[DeviceSpec]) -> DeviceSpec:
    """Looks a device up by exact name"""
    for d in devices:
        if d.name == name:
            return d
    raise CatalogError(f"no device named {name!r} in catalog")


def device_impairment(spec: DeviceSpec):
    """Impairment model whose band-edge loss is the device's insertion-loss spread"""
    return ImpairmentModel(kind='device', edge_loss_db=spec.loss_spread_db, device=spec)


def _parse_row(row: dict, line: int) -> DeviceSpec:
    name = row['name'].strip()
    if not name:
        raise CatalogError("device name is empty", line=line)

    def number(key, scale=1.0, optional=False):
        text = str(row.get(key, '')).strip()
        if not text or text.upper() == 'N/A':
            if optional:
                return None
            raise CatalogError(f"column {key} is required", line=line, device=name)
        try:
            return float(text) * scale
        except ValueError:
            raise CatalogError(f"column {key} is not a number: {text!r}", line=line, device=name)

    bits = row['resolution_bits'].strip()
    if bits.lower() != 'continuous':
        try:
            bits = int(bits)
        except ValueError:
            raise CatalogError(f"resolution_bits must be an integer or 'continuous', got {bits!r}",
                               line=line, device=name)
    else:
        bits = 'continuous'

    return DeviceSpec(
        name=name,
        kind=row['kind'].strip().upper(),
        resolution_bits=bits,
        freq_range_hz=(number('freq_min_ghz', 1e9), number('freq_max_ghz', 1e9)),
        insertion_loss_db=(number('loss_min_db'), number('loss_max_db')),
        delay_range_s=number('delay_range_ps', 1e-12, optional=True),
        max_phase_error_deg=number('max_phase_error_deg', optional=True),
        max_delay_error_s=number('max_delay_error_ps', 1e-12, optional=True),
    )


def _or_nan(value: Optional[float], scale=1.0) -> float:
    return np.nan if value is None else value * scale
