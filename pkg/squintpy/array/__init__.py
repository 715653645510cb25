from .squint import SquintAngle, squint_angle, squint_range
from .steering import array_gain, beam_gain_map, narrowband_gain_closed_form, steering_vector
