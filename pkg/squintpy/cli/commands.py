import json
import logging
import sys
from dataclasses import replace
from typing import Optional

import numpy as np
import pandas as pd

from squintpy.array import beam_gain_map
from squintpy.beamform import WbbgOptions, full_ttd_delays, mrt_phases, wbbg_optimize
from squintpy.core import Architecture, PerfCurve, Scenario, load_scenario
from squintpy.costadvisor import advise, architecture_cost, cost_sweep, crossover_thresholds
from squintpy.datasets import load_devices
from squintpy.exceptions import NoCrossoverError, SquintError
from squintpy.linkchan import atmospheric_specific_attenuation, dump_device_catalog, \
    load_device_catalog
from squintpy.perf import SweepOptions, evaluate_scenario, sweep_fractional_bandwidth, \
    workers_from_env, write_csv
from .manifest import RunManifest, manifest_path

__all__ = ["UsageError", "cmd_advise", "cmd_atm", "cmd_cost", "cmd_devices", "cmd_pattern",
           "cmd_sweep"]

logger = logging.getLogger(__name__)

PATTERN_COLUMNS = ['angle_deg', 'bf', 'architecture', 'gain']
ATM_COLUMNS = ['frequency_ghz', 'attenuation_db_per_km']


class UsageError(SquintError):
    """Invalid command line flags"""


def cmd_sweep(args) -> int:
    grid = _bf_grid(args)
    scenario = _scenario(args)
    workers = args.workers or workers_from_env()
    if workers is not None and workers < 1:
        raise UsageError("--workers must be a positive integer")

    table = sweep_fractional_bandwidth(scenario, grid, SweepOptions(workers=workers))
    _emit(table, args.out, 'sweep', scenario)
    return 0


def cmd_pattern(args) -> int:
    scenario = _scenario(args)
    if args.angle_steps < 2:
        raise UsageError("--angle-steps must be at least 2")
    offsets = np.asarray(args.bf if args.bf else [0.0], dtype=float)
    if np.any(np.abs(offsets) >= 1):
        raise UsageError("--bf offsets must lie in (-1, 1)")

    cfg, theta = scenario.array, scenario.target.angle_rad
    angles_deg = np.linspace(-90, 90, args.angle_steps)
    angles = np.deg2rad(angles_deg)

    mrt = mrt_phases(cfg, theta).as_complex()
    ttd = full_ttd_delays(cfg, theta)
    wbbg = wbbg_optimize(cfg, scenario.grid, theta, WbbgOptions(seed=scenario.seed))
    wbbg_weights = wbbg.weights.as_complex()

    frames = []
    for b in offsets:
        for label, w in ((PerfCurve.FullTTD_NBBG, ttd.as_complex(cfg, b)),
                         (PerfCurve.NonTTD_NBBG, mrt),
                         (PerfCurve.NonTTD_WBBG, wbbg_weights)):
            frames.append(pd.DataFrame({
                'angle_deg': angles_deg,
                'bf': float(b),
                'architecture': label.value,
                'gain': beam_gain_map(w, cfg, [b], angles)[0],
            }))

    table = pd.concat(frames, ignore_index=True)[PATTERN_COLUMNS]
    _emit(table, args.out, 'pattern', scenario)
    return 0


def cmd_cost(args) -> int:
    grid = _bf_grid(args)
    scenario = _scenario(args)
    table = cost_sweep(scenario, grid)
    _emit(table, args.out, 'cost', scenario)
    return 0


def cmd_advise(args) -> int:
    scenario = _scenario(args)
    perf_weight = args.perf_weight
    if not 0 <= perf_weight <= 1:
        raise UsageError("--perf-weight must lie in [0, 1]")

    bf = scenario.fractional_bandwidth
    cost = scenario.cost
    k = cost.sparse_ttd_count(scenario.n_elements)
    try:
        thresholds = crossover_thresholds(scenario.array, cost.n_rf, k, cost.model)
    except NoCrossoverError as e:
        logger.warning("%s", e)
        thresholds = None

    perf = evaluate_scenario(scenario)
    costs = [architecture_cost(a, scenario.array, cost.n_rf, k, cost.model, bf)
             for a in Architecture]
    rec = advise(scenario, perf_weight, 1 - perf_weight, perf, costs, thresholds)

    json.dump(rec.as_dict(), sys.stdout, indent=2)
    sys.stdout.write('\n')
    if args.out:
        with open(args.out, 'w', encoding='utf-8') as f:
            f.write(rec.summary().as_text())
            f.write('\n')
    return 0


def cmd_atm(args) -> int:
    if args.step_ghz <= 0 or args.f_max_ghz < args.f_min_ghz:
        raise UsageError("frequency range must satisfy f-min <= f-max and step > 0")

    count = int(np.floor((args.f_max_ghz - args.f_min_ghz) / args.step_ghz + 1e-9)) + 1
    freq_ghz = args.f_min_ghz + args.step_ghz * np.arange(count)
    table = pd.DataFrame({
        'frequency_ghz': freq_ghz,
        'attenuation_db_per_km': np.atleast_1d(atmospheric_specific_attenuation(freq_ghz * 1e9)),
    })[ATM_COLUMNS]
    _emit(table, args.out)
    return 0


def cmd_devices(args) -> int:
    if args.catalog:
        with open(args.catalog, 'rb') as f:
            devices = load_device_catalog(f)
    else:
        devices = load_devices()

    if args.band_ghz:
        lo, hi = args.band_ghz
        devices = [d for d in devices if d.covers(lo * 1e9, hi * 1e9)]

    _emit(dump_device_catalog(devices), args.out)
    return 0


def _scenario(args) -> Scenario:
    scenario = load_scenario(args.config)
    if getattr(args, 'seed', None) is not None:
        scenario = replace(scenario, seed=args.seed)
    logger.info("loaded %s: N=%d, f0=%.6g Hz, %d carriers", args.config, scenario.n_elements,
                scenario.array.center_frequency_hz, scenario.grid.size)
    return scenario


def _bf_grid(args) -> np.ndarray:
    if args.bf_steps < 1:
        raise UsageError("empty grid")
    if not 0 <= args.bf_min <= args.bf_max < 2:
        raise UsageError("bandwidth range must satisfy 0 <= bf-min <= bf-max < 2")
    return np.linspace(args.bf_min, args.bf_max, args.bf_steps)


def _emit(table: pd.DataFrame, out: Optional[str], command: str = None,
          scenario: Scenario = None):
    if out is None:
        write_csv(table, sys.stdout)
        return

    write_csv(table, out)
    logger.info("wrote %d rows to %s", len(table), out)
    if command is not None:
        RunManifest.create(command, scenario).write(manifest_path(out))
