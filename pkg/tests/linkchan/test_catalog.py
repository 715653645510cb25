import io

import pytest

from squintpy.datasets import load_devices
from squintpy.exceptions import CatalogError
from squintpy.linkchan import device_impairment, dump_device_catalog, find_device, \
    load_device_catalog

HEADER = ("name,kind,resolution_bits,freq_min_ghz,freq_max_ghz,delay_range_ps,"
          "max_phase_error_deg,max_delay_error_ps,loss_min_db,loss_max_db\n")


def parse(text: str):
    return load_device_catalog(io.BytesIO(text.encode('utf-8')))


def test_bundled_catalog():
    devices = load_devices()
    assert len(devices) == 6
    assert sum(d.kind == 'TTD' for d in devices) == 3

    photonic = find_device('Photonic TTD (EuMC 2021)', devices)
    assert photonic.is_continuous
    assert photonic.freq_range_hz == (53e9, 120e9)
    assert photonic.delay_range_s is None

    adar = find_device('ADAR4002 (Analog Devices)', devices)
    assert adar.resolution_bits == 7
    assert adar.delay_range_s == pytest.approx(254e-12)
    assert adar.max_delay_error_s == pytest.approx(2e-12)
    assert adar.insertion_loss_db == (1.0, 20.0)


def test_dump_then_load_keeps_devices(tmp_path):
    devices = load_devices()
    path = tmp_path / 'catalog.csv'
    dump_device_catalog(devices).to_csv(path, index=False)

    reloaded = load_device_catalog(path)
    assert [d.name for d in reloaded] == [d.name for d in devices]
    for a, b in zip(reloaded, devices):
        assert a.freq_range_hz == pytest.approx(b.freq_range_hz)
        assert a.resolution_bits == b.resolution_bits


def test_empty_catalog():
    assert parse("") == []


def test_parse_error_reports_line():
    text = HEADER + "A,PS,4,1,2,,,,0,1\nB,PS,4,1,2,,,,0,1,extra,cells\n"
    with pytest.raises(CatalogError, match="line 3") as e:
        parse(text)
    assert e.value.line == 3


def test_missing_column():
    with pytest.raises(CatalogError, match="missing columns: loss_max_db"):
        parse("name,kind,resolution_bits,freq_min_ghz,freq_max_ghz,loss_min_db\nA,PS,4,1,2,0\n")


@pytest.mark.parametrize("row, match", [
    ("Bad,PS,4,20,10,,,,0,1", "frequency range"),
    ("Bad,PS,4,1,2,,,,5,1", "loss_min"),
    ("Bad,PS,four,1,2,,,,0,1", "resolution_bits"),
    ("Bad,PS,4,1,2,,,,0,", "loss_max_db is required"),
])
def test_invalid_rows_name_the_device(row, match):
    with pytest.raises(CatalogError, match=match) as e:
        parse(HEADER + row + "\n")
    assert e.value.device == 'Bad'


def test_unknown_device():
    with pytest.raises(CatalogError, match="no device named"):
        find_device('nothing', load_devices())


def test_device_impairment_uses_loss_spread():
    model = device_impairment(find_device('TGP2105-SM (Qorvo)', load_devices()))
    assert model.kind == 'device'
    assert model.effective_edge_loss_db == 4.0
    model.check()
