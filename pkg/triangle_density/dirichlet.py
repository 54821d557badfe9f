import logging
import math

import numpy as np

from triangle_density.arith import PrimeTable, euler_phi, trial_factorize
from triangle_density.config import Config
from triangle_density.errors import InvalidArgumentException
from triangle_density.models import InfntsizePrimes, LogSizeReport, ProgressionClass
from triangle_density.summation import reciprocal_sum

log = logging.getLogger(__name__)


def _require_covered(x: int, table: PrimeTable) -> None:
    if x < 1:
        raise InvalidArgumentException("x must be positive, got %d" % x)
    if table.limit < x:
        raise InvalidArgumentException("Prime table up to %d does not cover x = %d" % (table.limit, x))


def _require_delta(delta: float) -> None:
    if not 0 < delta < 1:
        raise InvalidArgumentException("delta must lie in (0,1), got %r" % delta)


def threshold_of(x: int, delta: float) -> float:
    """
    (log x)^(1+delta), natural logarithm
    """
    return math.log(x) ** (1 + delta)


def primes_in_class(cls: ProgressionClass, x: int, table: PrimeTable) -> np.ndarray:
    _require_covered(x, table)
    primes = table.primes_up_to(x)
    return primes[primes % cls.b == cls.a % cls.b]


def logsize_vs_asymptote(cls: ProgressionClass, x: int, table: PrimeTable) -> LogSizeReport:
    """
    Logarithmic size of the class primes up to x against (1/phi(b)) log log x
    """
    if x < 16:
        raise InvalidArgumentException("x must be at least 16 so that log log x exceeds 1, got %d" % x)
    ell = reciprocal_sum(primes_in_class(cls, x, table))
    predicted = math.log(math.log(x)) / euler_phi(trial_factorize(cls.b))
    return LogSizeReport(x, ell, predicted)


def truncated_class(cls: ProgressionClass, x: int, delta: float, table: PrimeTable) -> np.ndarray:
    """
    Class primes p with (log x)^(1+delta) < p <= x
    """
    _require_delta(delta)
    primes = primes_in_class(cls, x, table)
    return primes[primes > threshold_of(x, delta)]


def truncated_logsize(cls: ProgressionClass, x: int, delta: float, table: PrimeTable) -> LogSizeReport:
    """
    Logarithmic size of the truncated class against (1/phi(b)) log(log x / ((1+delta) log log x))
    """
    if x < 16:
        raise InvalidArgumentException("x must be at least 16 so that log log x exceeds 1, got %d" % x)
    ell = reciprocal_sum(truncated_class(cls, x, delta, table))
    log_x = math.log(x)
    predicted = math.log(log_x / ((1 + delta) * math.log(log_x))) / euler_phi(trial_factorize(cls.b))
    return LogSizeReport(x, ell, predicted)


def _progression(m: int, primes: np.ndarray, start: int) -> np.ndarray:
    modulus = 2 * m
    first = modulus - 1 + modulus * start
    return primes[(primes % modulus == modulus - 1) & (primes >= first)]


def infntsize_primes(m: int, x: int, table: PrimeTable) -> InfntsizePrimes:
    """
    Odd primes p <= x with gcd((p-1)/2, m) = 1, plus the members of the progression 2m - 1 + 2mn

    Parameters
    ----------
    m: int
        Modulus, at least 2
    x: int
    table: PrimeTable
        Must cover x
    """
    if m < 2:
        raise InvalidArgumentException("m must exceed 1, got %d" % m)
    _require_covered(x, table)

    odd = table.primes_up_to(x)[1:]
    primes = odd[np.gcd((odd - 1) // 2, m) == 1]
    return InfntsizePrimes(m, x, primes,
                           _progression(m, odd, Config.progression_start),
                           _progression(m, odd, 1))


def admissible_primes(m: int, x: int, threshold: float, table: PrimeTable) -> np.ndarray:
    """
    The primes p with threshold < p <= x and gcd((p-1)/2, m) = 1
    """
    primes = infntsize_primes(m, x, table).primes
    return primes[primes > threshold]
