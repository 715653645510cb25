from squintpy.core.hardware import DeviceSpec, ImpairmentModel, LinkModel
from .atmosphere import atmospheric_specific_attenuation, attenuation_table_range
from .catalog import CATALOG_COLUMNS, device_impairment, dump_device_catalog, find_device, \
    load_device_catalog
from .impairment import impairment_factor
from .snr import carrier_snr
