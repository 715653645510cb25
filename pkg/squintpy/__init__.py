from squintpy._config import get_option, option_context, set_option
from squintpy.array import array_gain, beam_gain_map, narrowband_gain_closed_form, squint_angle, \
    steering_vector
from squintpy.beamform import WbbgOptimizer, WbbgOptions, WbbgSolution, exhaustive_phase_search, \
    full_ttd_delays, mrt_phases, sparse_ttd_bounds, wbbg_optimize
from squintpy.core import Architecture, PerfCurve, Scenario, load_scenario, scenario_from_dict, \
    validate_scenario, with_fractional_bandwidth
from squintpy.costadvisor import advise, architecture_cost, cost_sweep, crossover_thresholds
from squintpy.perf import evaluate_scenario, performance_gap, sweep_fractional_bandwidth
from ._version import __version__
