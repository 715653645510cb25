from .architecture import Architecture, PerfCurve
from .geometry import ArrayConfig, CarrierGrid, SteeringTarget
from .hardware import CostModel, CostSettings, DeviceSpec, ImpairmentModel, LinkModel
from .io import dump_scenario, load_scenario, scenario_digest, scenario_from_dict, scenario_to_dict
from .scenario import Scenario, validate_scenario, with_fractional_bandwidth
