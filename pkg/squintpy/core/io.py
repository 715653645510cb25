import hashlib
import json
import logging
from dataclasses import asdict
from os import PathLike
from typing import Any, Mapping, Union

import numpy as np

from squintpy.exceptions import ScenarioError
from .geometry import ArrayConfig, CarrierGrid, SteeringTarget
from .hardware import CostModel, CostSettings, DeviceSpec, ImpairmentModel, LinkModel
from .scenario import Scenario, validate_scenario

__all__ = ["dump_scenario", "load_scenario", "scenario_digest", "scenario_from_dict",
           "scenario_to_dict"]

_SECTIONS = {'array', 'grid', 'target', 'impairment', 'link', 'cost', 'hybrid_efficiency', 'seed'}

logger = logging.getLogger(__name__)


def load_scenario(path: Union[str, PathLike]) -> Scenario:
    """
    Reads and validates a JSON scenario file.

    Parameters
    ----------
    path: str or path-like
        Location of the UTF-8 encoded scenario file

    Returns
    -------
    Scenario
        Validated scenario

    Raises
    ------
    ScenarioError
        If the file is not valid JSON, misses a required key or breaks an invariant
    """
    with open(path, encoding='utf-8') as f:
        try:
            data = json.load(f)
        except json.JSONDecodeError as e:
            raise ScenarioError(f"{path}: malformed scenario file at line {e.lineno}: {e.msg}")
    return scenario_from_dict(data)


def dump_scenario(s: Scenario, path: Union[str, PathLike]):
    with open(path, 'w', encoding='utf-8') as f:
        json.dump(scenario_to_dict(s), f, indent=2)


def scenario_from_dict(data: Mapping[str, Any]) -> Scenario:
    """
    Builds a validated scenario from its nested mapping form.

    Required keys are ``array.n_elements``, ``array.f0_hz``, ``grid.half_count``, one of
    ``grid.bandwidth_hz`` or ``grid.fractional_bandwidth`` and one of ``target.angle_deg`` or
    ``target.angle_rad``. Every other key is optional.
    """
    try:
        s = validate_scenario(_build(data))
    except ScenarioError:
        raise
    except (KeyError, OSError, TypeError, ValueError) as e:
        raise ScenarioError(f"malformed scenario: {e}") from e

    if s.impairment.kind == 'device':
        f = s.grid.frequencies_hz
        if not s.impairment.device.covers(f.min(), f.max()):
            logger.warning("device %s does not cover the carrier band %.4g-%.4g GHz",
                           s.impairment.device.name, f.min() / 1e9, f.max() / 1e9)
    return s


def _build(data: Mapping[str, Any]) -> Scenario:
    if not isinstance(data, Mapping):
        raise ScenarioError("scenario must be a JSON object")
    unknown = set(data) - _SECTIONS
    if unknown:
        raise ScenarioError(f"unknown scenario sections: {', '.join(sorted(unknown))}")

    array_ = _section(data, 'array')
    f0 = float(_required(array_, 'array', 'f0_hz'))
    n = _integer(_required(array_, 'array', 'n_elements'), 'array.n_elements')
    array = ArrayConfig(n_elements=n,
                        center_frequency_hz=f0,
                        element_spacing_fraction=float(array_.get('spacing_fraction', 0.5)))

    grid_ = _section(data, 'grid')
    if 'bandwidth_hz' in grid_:
        bandwidth = float(grid_['bandwidth_hz'])
    elif 'fractional_bandwidth' in grid_:
        bandwidth = float(grid_['fractional_bandwidth']) * f0
    else:
        raise ScenarioError("missing key grid.bandwidth_hz")
    m = _integer(_required(grid_, 'grid', 'half_count'), 'grid.half_count')
    grid = CarrierGrid(half_count=m,
                       total_bandwidth_hz=bandwidth,
                       center_frequency_hz=f0)

    target_ = _section(data, 'target')
    if 'angle_rad' in target_:
        angle = float(target_['angle_rad'])
    else:
        angle = float(np.radians(float(_required(target_, 'target', 'angle_deg'))))
    target = SteeringTarget(angle_rad=angle,
                            link_distance_m=float(target_.get('distance_m', 100.0)))

    impairment_ = _section(data, 'impairment', optional=True)
    device = impairment_.get('device')
    if isinstance(device, str):
        device = _lookup_device(device, impairment_.get('catalog'))
    elif isinstance(device, Mapping):
        device = DeviceSpec(**{**device,
                               'freq_range_hz': tuple(device['freq_range_hz']),
                               'insertion_loss_db': tuple(device['insertion_loss_db'])})
    kind = impairment_.get('kind', 'device' if device is not None else 'linear_db')
    impairment = ImpairmentModel(kind=kind,
                                 edge_loss_db=float(impairment_.get('edge_loss_db', 6.0)),
                                 device=device)

    link_ = _section(data, 'link', optional=True)
    link = LinkModel(snr0_db=float(link_.get('snr0_db', 0.0)),
                     atmosphere_enabled=_boolean(link_.get('atmosphere', False)),
                     temperature_c=float(link_.get('temperature_c', 15.0)),
                     pressure_pa=float(link_.get('pressure_pa', 101300.0)),
                     water_vapor_g_m3=float(link_.get('water_vapor_g_m3', 7.5)))

    cost_ = dict(_section(data, 'cost', optional=True))
    n_rf = _integer(cost_.pop('n_rf', 1), 'cost.n_rf')
    n_ttd_sparse = cost_.pop('n_ttd_sparse', None)
    try:
        model = CostModel(**{k: float(v) for k, v in cost_.items()})
    except TypeError as e:
        raise ScenarioError(f"invalid cost section: {e}")
    if n_ttd_sparse is not None:
        n_ttd_sparse = _integer(n_ttd_sparse, 'cost.n_ttd_sparse')
    cost = CostSettings(model=model, n_rf=n_rf, n_ttd_sparse=n_ttd_sparse)

    return Scenario(array=array,
                    grid=grid,
                    target=target,
                    impairment=impairment,
                    link=link,
                    hybrid_efficiency=float(data.get('hybrid_efficiency', 1.0)),
                    cost=cost,
                    seed=_integer(data.get('seed', 0), 'seed'))


def scenario_to_dict(s: Scenario) -> dict:
    """Nested mapping form of a scenario, readable by :func:`scenario_from_dict`"""
    impairment = {'kind': s.impairment.kind, 'edge_loss_db': s.impairment.edge_loss_db}
    if s.impairment.device is not None:
        impairment['device'] = asdict(s.impairment.device)

    cost = asdict(s.cost.model)
    cost['n_rf'] = s.cost.n_rf
    if s.cost.n_ttd_sparse is not None:
        cost['n_ttd_sparse'] = s.cost.n_ttd_sparse

    return {
        'array': {
            'n_elements': int(s.array.n_elements),
            'f0_hz': s.array.center_frequency_hz,
            'spacing_fraction': s.array.element_spacing_fraction,
        },
        'grid': {
            'half_count': int(s.grid.half_count),
            'bandwidth_hz': s.grid.total_bandwidth_hz,
        },
        'target': {
            'angle_rad': s.target.angle_rad,
            'distance_m': s.target.link_distance_m,
        },
        'impairment': impairment,
        'link': {
            'snr0_db': s.link.snr0_db,
            'atmosphere': s.link.atmosphere_enabled,
            'temperature_c': s.link.temperature_c,
            'pressure_pa': s.link.pressure_pa,
            'water_vapor_g_m3': s.link.water_vapor_g_m3,
        },
        'cost': cost,
        'hybrid_efficiency': s.hybrid_efficiency,
        'seed': int(s.seed),
    }


def scenario_digest(s: Scenario) -> str:
    """SHA-256 digest of the canonical JSON form of the scenario"""
    text = json.dumps(scenario_to_dict(s), sort_keys=True, separators=(',', ':'))
    return hashlib.sha256(text.encode('utf-8')).hexdigest()


def _section(data: Mapping, name: str, optional=False) -> Mapping:
    section = data.get(name)
    if section is None:
        if optional:
            return {}
        raise ScenarioError(f"missing section {name}")
    if not isinstance(section, Mapping):
        raise ScenarioError(f"section {name} must be an object")
    return section


def _required(section: Mapping, name: str, key: str):
    if key not in section:
        raise ScenarioError(f"missing key {name}.{key}")
    return section[key]


def _integer(value, name: str) -> int:
    if isinstance(value, bool) or not float(value).is_integer():
        raise ScenarioError(f"{name} must be an integer, got {value!r}")
    return int(value)


def _boolean(value) -> bool:
    if isinstance(value, bool):
        return value
    if isinstance(value, str) and value.lower() in ('on', 'off', 'true', 'false'):
        return value.lower() in ('on', 'true')
    raise ScenarioError(f"link.atmosphere must be on/off, got {value!r}")


def _lookup_device(name: str, catalog=None) -> DeviceSpec:
    # datasets imports core, so the catalog readers are resolved at call time
    from squintpy.datasets import load_devices
    from squintpy.linkchan.catalog import find_device, load_device_catalog

    devices = load_devices() if catalog is None else load_device_catalog(catalog)
    try:
        return find_device(name, devices)
    except ValueError as e:
        raise ScenarioError(str(e))
