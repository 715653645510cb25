__all__ = [
    "CatalogError",
    "DelayRangeError",
    "DimensionMismatchError",
    "FrequencyRangeError",
    "NoCrossoverError",
    "NotOptimizedError",
    "ScenarioError",
    "SquintError",
    "UnsupportedGeometryError",
]


class SquintError(Exception):
    """Base class of the errors raised by squintpy"""


class ScenarioError(SquintError, ValueError):
    """A scenario or one of its components breaks an invariant"""


class CatalogError(SquintError, ValueError):
    def __init__(self, message: str, line: int = None, device: str = None):
        if line is not None:
            message = f"line {line}: {message}"
        if device is not None:
            message = f"device '{device}': {message}"
        super().__init__(message)
        self.line = line
        self.device = device


class DimensionMismatchError(SquintError, ValueError):
    pass


class UnsupportedGeometryError(SquintError, ValueError):
    pass


class DelayRangeError(SquintError, ValueError):
    def __init__(self, required: float, available: float):
        super().__init__(f"aperture needs a delay of {required * 1e12:.6g} ps but the delay line "
                         f"only covers {available * 1e12:.6g} ps")
        self.required = required
        self.available = available


class FrequencyRangeError(SquintError, ValueError):
    def __init__(self, frequency_hz, low_hz: float, high_hz: float):
        super().__init__(f"frequency {frequency_hz / 1e9:.6g} GHz is outside the attenuation table "
                         f"range [{low_hz / 1e9:g}, {high_hz / 1e9:g}] GHz")


class NoCrossoverError(SquintError, RuntimeError):
    def __init__(self, bf_max: float):
        super().__init__(f"no crossover in range (0, {bf_max:g}]: one architecture is cheapest "
                         f"at every fractional bandwidth")


class NotOptimizedError(SquintError):
    def __init__(self):
        super().__init__("Optimizer has not been optimized yet")
