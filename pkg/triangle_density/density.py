import logging
from abc import ABC, abstractmethod
from fractions import Fraction
from typing import Callable, Iterable, List, Sequence, Tuple

import numpy as np

from triangle_density.errors import InvalidArgumentException
from triangle_density.models import DensitySeries
from triangle_density.summation import reciprocal_sum

log = logging.getLogger(__name__)


class CheckpointListener(ABC):
    @abstractmethod
    def on_checkpoint(self, series: str, x: int, count: int) -> None:
        """
        Parameters
        ----------
        series: str
            Name of the series being tabulated
        x: int
            The checkpoint just reached
        count: int
            Members of the set up to x
        """
        pass


def _check_checkpoints(checkpoints: Sequence[int]) -> List[int]:
    checkpoints = list(checkpoints)
    if not checkpoints or checkpoints[0] < 1:
        raise InvalidArgumentException("Checkpoints must be positive, got %s" % checkpoints)
    if any(a >= b for a, b in zip(checkpoints, checkpoints[1:])):
        raise InvalidArgumentException("Checkpoints must be strictly ascending, got %s" % checkpoints)
    return checkpoints


def dx_count(predicate: Callable[[int], bool], x: int) -> Tuple[int, Fraction]:
    """
    Returns
    -------
    (count, ratio)
        Members of {1..x} satisfying the predicate, and count / x kept exact
    """
    if x < 1:
        raise InvalidArgumentException("x must be positive, got %d" % x)
    count = sum(1 for n in range(1, x + 1) if predicate(n))
    return count, Fraction(count, x)


def density_series(predicate: Callable[[int], bool], checkpoints: Sequence[int],
                   listeners: Iterable[CheckpointListener] = (), name: str = "S") -> DensitySeries:
    """
    Counts of a predicate-defined set at each checkpoint, in one streaming pass over 1..max(checkpoints)
    """
    checkpoints = _check_checkpoints(checkpoints)
    listeners = list(listeners)
    counts = []
    count = 0
    n = 0
    for x in checkpoints:
        while n < x:
            n += 1
            if predicate(n):
                count += 1
        counts.append(count)
        for listener in listeners:
            listener.on_checkpoint(name, x, count)
    return DensitySeries(checkpoints, counts)


def series_from_mask(mask: np.ndarray, checkpoints: Sequence[int],
                     listeners: Iterable[CheckpointListener] = (), name: str = "S") -> DensitySeries:
    """
    Parameters
    ----------
    mask: np.ndarray
        Boolean membership indexed by n; entry 0 is ignored
    checkpoints: Sequence[int]
        Ascending, none beyond len(mask) - 1
    """
    checkpoints = _check_checkpoints(checkpoints)
    if checkpoints[-1] >= len(mask):
        raise InvalidArgumentException("Mask covers 1..%d, checkpoint %d is beyond it" % (len(mask) - 1, checkpoints[-1]))
    running = np.cumsum(mask[1:], dtype=np.int64)
    counts = [int(running[x - 1]) for x in checkpoints]
    for listener in listeners:
        for x, count in zip(checkpoints, counts):
            listener.on_checkpoint(name, x, count)
    return DensitySeries(checkpoints, counts)


def logarithmic_size(elements) -> float:
    """
    Compensated sum of 1/n over a finite set of positive integers
    """
    return reciprocal_sum(elements)
