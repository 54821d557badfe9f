import math
from typing import Iterable

import numpy as np


class CompensatedSum(object):
    """
    Running binary64 sum with a Neumaier correction term.

    Blocks of terms are folded in with ``extend``, which adds the correctly
    rounded ``math.fsum`` of the block, so the combined value does not depend
    on how a stream was cut into blocks beyond the last rounding.
    """

    def __init__(self, value: float = 0.0):
        self._sum = float(value)
        self._compensation = 0.0

    def add(self, term: float) -> None:
        term = float(term)
        total = self._sum + term
        if abs(self._sum) >= abs(term):
            self._compensation += (self._sum - total) + term
        else:
            self._compensation += (term - total) + self._sum
        self._sum = total

    def extend(self, terms: Iterable[float]) -> None:
        self.add(math.fsum(terms))

    @property
    def value(self) -> float:
        return self._sum + self._compensation

    def __float__(self) -> float:
        return self.value


def compensated_sum(terms: Iterable[float]) -> float:
    acc = CompensatedSum()
    for term in terms:
        acc.add(term)
    return acc.value


def reciprocal_sum(values) -> float:
    """
    Sum of 1/v over the given positive values (any iterable or numpy array)
    """
    acc = CompensatedSum()
    if isinstance(values, np.ndarray):
        acc.extend((1.0 / values.astype(np.float64)).tolist())
    else:
        acc.extend(1.0 / float(v) for v in values)
    return acc.value
