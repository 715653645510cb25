import json
from dataclasses import replace
from pathlib import Path

import pytest

from squintpy.core import ImpairmentModel, scenario_from_dict

CONFIG_DIR = Path(__file__).parents[1] / 'configs'


def read_config(name: str) -> dict:
    with open(CONFIG_DIR / f"{name}.json", encoding='utf-8') as f:
        return json.load(f)


@pytest.fixture(scope="session")
def config_dir():
    return CONFIG_DIR


@pytest.fixture(scope="session")
def mmwave():
    return scenario_from_dict(read_config('mmwave'))


@pytest.fixture(scope="session")
def subthz():
    return scenario_from_dict(read_config('subthz'))


@pytest.fixture(scope="session")
def mmwave_ideal(mmwave):
    """mmWave setup with lossless phase shifters"""
    return replace(mmwave, impairment=ImpairmentModel('ideal'))
