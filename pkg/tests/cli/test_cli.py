import io
import json

import numpy as np
import pandas as pd
import pytest

from squintpy import option_context
from squintpy.array import squint_angle
from squintpy.cli import build_parser, main
from squintpy.costadvisor import COST_COLUMNS
from squintpy.linkchan import CATALOG_COLUMNS
from squintpy.perf import SWEEP_COLUMNS


@pytest.fixture(autouse=True)
def fast_optimizer():
    with option_context({'WBBG.RESTARTS': 2}):
        yield


@pytest.fixture(scope="module")
def mmwave_path(config_dir):
    return str(config_dir / 'mmwave.json')


def stdout_table(capsys) -> pd.DataFrame:
    return pd.read_csv(io.StringIO(capsys.readouterr().out), float_precision='round_trip')


def test_sweep_writes_table_and_manifest(mmwave_path, tmp_path):
    out = tmp_path / 'sweep.csv'
    argv = ['sweep', mmwave_path, '--bf-min', '0.01', '--bf-max', '0.3', '--bf-steps', '20',
            '--out', str(out)]
    assert main(argv) == 0

    table = pd.read_csv(out, float_precision='round_trip')
    assert list(table.columns) == SWEEP_COLUMNS
    assert len(table) == 100

    manifest = json.loads((tmp_path / 'sweep.csv.manifest.json').read_text(encoding='utf-8'))
    assert manifest['command'] == 'sweep'
    assert manifest['seed'] == 0
    assert len(manifest['scenario_digest']) == 64

    first = out.read_bytes()
    assert main(argv) == 0
    assert out.read_bytes() == first


def test_sweep_workers_from_environment(mmwave_path, tmp_path, monkeypatch):
    serial, threaded = tmp_path / 'serial.csv', tmp_path / 'threaded.csv'
    argv = ['sweep', mmwave_path, '--bf-min', '0.05', '--bf-max', '0.2', '--bf-steps', '4']
    assert main(argv + ['--workers', '1', '--out', str(serial)]) == 0

    monkeypatch.setenv('SQUINTPY_WORKERS', '3')
    assert main(argv + ['--out', str(threaded)]) == 0
    assert serial.read_bytes() == threaded.read_bytes()


def test_seed_override_lands_in_manifest(mmwave_path, tmp_path):
    out = tmp_path / 'sweep.csv'
    assert main(['sweep', mmwave_path, '--bf-steps', '1', '--seed', '7', '--out', str(out)]) == 0
    manifest = json.loads((tmp_path / 'sweep.csv.manifest.json').read_text(encoding='utf-8'))
    assert manifest['seed'] == 7
    assert set(pd.read_csv(out, float_precision='round_trip')['seed']) == {7}


def test_empty_grid_is_a_usage_error(mmwave_path, capsys):
    assert main(['sweep', mmwave_path, '--bf-steps', '0']) == 1
    assert "empty grid" in capsys.readouterr().err


@pytest.mark.parametrize("argv", [
    ['sweep'],
    ['sweep', 'x.json', '--bf-steps', 'many'],
    ['unknown'],
    ['cost', 'x.json', '--bf-min', '0.5', '--bf-max', '0.1'],
])
def test_bad_flags_exit_with_one(argv, capsys):
    assert main(argv) == 1
    assert capsys.readouterr().err.startswith("squintpy: error:")


def test_malformed_config(tmp_path, capsys):
    bad = tmp_path / 'bad.json'
    bad.write_text('{"array": ', encoding='utf-8')
    assert main(['cost', str(bad)]) == 1
    assert "malformed" in capsys.readouterr().err

    assert main(['cost', str(tmp_path / 'missing.json')]) == 1


def test_invalid_scenario_values(tmp_path, capsys, config_dir):
    config = json.loads((config_dir / 'mmwave.json').read_text(encoding='utf-8'))
    config['array']['n_elements'] = 0
    path = tmp_path / 'zero.json'
    path.write_text(json.dumps(config), encoding='utf-8')
    assert main(['advise', str(path)]) == 1


class TestPattern:
    @pytest.fixture(scope="class")
    def table(self, config_dir, tmp_path_factory):
        out = tmp_path_factory.mktemp('pattern') / 'pattern.csv'
        with option_context({'WBBG.RESTARTS': 2}):
            code = main(['pattern', str(config_dir / 'mmwave.json'), '--bf', '-0.05', '0', '0.05',
                         '--out', str(out)])
        assert code == 0
        return pd.read_csv(out, float_precision='round_trip')

    def test_layout(self, table):
        assert len(table) == 3 * 3 * 181
        assert set(table['architecture']) == {'FullTTD_NBBG', 'NonTTD_NBBG', 'NonTTD_WBBG'}

    def test_full_ttd_peaks_at_the_user_for_every_carrier(self, table):
        ttd = table[table['architecture'] == 'FullTTD_NBBG']
        for _, rows in ttd.groupby('bf'):
            assert rows.loc[rows['gain'].idxmax(), 'angle_deg'] == pytest.approx(60.0)

    def test_phase_shifter_beam_squints(self, table):
        mrt = table[(table['architecture'] == 'NonTTD_NBBG') & np.isclose(table['bf'], 0.05)]
        peak = mrt.loc[mrt['gain'].idxmax(), 'angle_deg']
        expected = squint_angle(np.deg2rad(60.0), 28e9, 1.05 * 28e9).angle_deg
        assert abs(peak - expected) <= 1.0

    def test_wideband_gain_is_flatter_at_the_user(self, table):
        at_user = table[np.isclose(table['angle_deg'], 60.0)]

        def spread(label):
            gains = at_user[at_user['architecture'] == label]['gain']
            return gains.max() - gains.min()

        assert spread('NonTTD_WBBG') < spread('NonTTD_NBBG')


def test_pattern_rejects_offsets_outside_the_band(mmwave_path):
    assert main(['pattern', mmwave_path, '--bf', '1.5']) == 1


def test_cost_table(mmwave_path, capsys):
    assert main(['cost', mmwave_path, '--bf-min', '0', '--bf-max', '0.9', '--bf-steps', '31']) == 0
    table = stdout_table(capsys)
    assert list(table.columns) == COST_COLUMNS
    assert len(table) == 31 * 4

    orderings = set()
    cheapest = []
    for _, rows in table.groupby('bf', sort=True):
        ranked = rows.sort_values('total_cost', kind='mergesort')['architecture']
        orderings.add(tuple(ranked))
        cheapest.append(ranked.iloc[0])

    assert len(orderings) >= 3
    assert cheapest[0] == 'NonTTD_NBBG'
    assert cheapest[-1] == 'FullTTD_NBBG'


def test_advise_prints_record_and_writes_report(mmwave_path, tmp_path, capsys):
    report = tmp_path / 'report.txt'
    assert main(['advise', mmwave_path, '--perf-weight', '1.0', '--out', str(report)]) == 0

    record = json.loads(capsys.readouterr().out)
    assert record['architecture'] == 'FullTTD_NBBG'
    assert record['cost_weight'] == 0.0
    assert 0 < record['th1'] < record['th2'] < 1
    assert record['regime'] == 'narrowband'
    assert "Recommended architecture: FullTTD_NBBG" in report.read_text(encoding='utf-8')


def test_advise_rejects_weights_outside_unit_interval(mmwave_path, capsys):
    assert main(['advise', mmwave_path, '--perf-weight', '1.5']) == 1
    assert "perf-weight" in capsys.readouterr().err


def test_atmosphere_slice(capsys):
    assert main(['atm', '--f-min-ghz', '50', '--f-max-ghz', '70', '--step-ghz', '1']) == 0
    table = stdout_table(capsys)
    assert len(table) == 21
    peak = table.loc[table['attenuation_db_per_km'].idxmax(), 'frequency_ghz']
    assert peak == pytest.approx(60.0)
    assert table['attenuation_db_per_km'].max() == pytest.approx(15.1)


def test_atmosphere_outside_table(capsys):
    assert main(['atm', '--f-min-ghz', '0.1', '--f-max-ghz', '2']) == 2
    assert "squintpy: error:" in capsys.readouterr().err


def test_devices(capsys):
    assert main(['devices']) == 0
    table = stdout_table(capsys)
    assert list(table.columns) == CATALOG_COLUMNS
    assert len(table) == 6

    assert main(['devices', '--band-ghz', '60', '100']) == 0
    assert list(stdout_table(capsys)['name']) == ['Photonic TTD (EuMC 2021)']


def test_devices_missing_catalog(tmp_path):
    assert main(['devices', '--catalog', str(tmp_path / 'none.csv')]) == 1


def test_version(capsys):
    with pytest.raises(SystemExit) as e:
        build_parser().parse_args(['--version'])
    assert e.value.code == 0
    assert capsys.readouterr().out.startswith("squintpy ")
