from typing import Iterable, Union

import numpy as np

__all__ = [
    "Array",
    "Numeric",
    "Real",
]

Real = Union[int, float]
Array = Union[np.ndarray, Iterable[Real]]
Numeric = Union[Array, Real]
