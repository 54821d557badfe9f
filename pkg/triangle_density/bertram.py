import logging
import math
from math import gcd
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

from triangle_density.arith import PrimeTable, divisors, factorize
from triangle_density.density import CheckpointListener
from triangle_density.dirichlet import admissible_primes
from triangle_density.errors import InvalidArgumentException
from triangle_density.models import ComplementBoundReport, DensitySeries, ExceptionKind, ExceptionReport, \
    KxCheckpoint, SieveParams
from triangle_density.turan_kubilius import tk_statistics

log = logging.getLogger(__name__)


def _require_sqrt_covered(x: int, table: PrimeTable) -> None:
    if table.limit < math.isqrt(x):
        raise InvalidArgumentException("Prime table up to %d does not cover sqrt(%d)" % (table.limit, x))


def _require_covered(x: int, table: PrimeTable) -> None:
    if table.limit < x:
        raise InvalidArgumentException("Prime table up to %d does not cover x = %d" % (table.limit, x))


def _primes_above(f: float, bound: int, table: PrimeTable) -> List[int]:
    primes = table.primes_up_to(min(bound, table.limit))
    return primes[primes > f].tolist()


def square_factor_mask(x: int, f: float, table: PrimeTable) -> np.ndarray:
    """
    mask[n] is set iff p^2 divides n for some prime p > f
    """
    _require_sqrt_covered(x, table)
    mask = np.zeros(x + 1, dtype=bool)
    for p in _primes_above(f, math.isqrt(x), table):
        mask[p * p::p * p] = True
    return mask


def congruent_divisor_mask(x: int, f: float, table: PrimeTable) -> np.ndarray:
    """
    mask[n] is set iff some prime p > f divides n together with a divisor d > 1 of n, d = 1 mod p
    """
    _require_sqrt_covered(x, table)
    mask = np.zeros(x + 1, dtype=bool)
    # Such d is prime to p and at least p + 1, so p * d <= x forces p <= sqrt(x)
    for p in _primes_above(f, math.isqrt(x), table):
        for d in range(p + 1, x // p + 1, p):
            mask[p * d::p * d] = True
    return mask


def prime_factor_mask(x: int, primes: Iterable[int]) -> np.ndarray:
    """
    mask[n] is set iff n has a prime factor among the given primes
    """
    mask = np.zeros(x + 1, dtype=bool)
    for p in primes:
        mask[p::p] = True
    return mask


def kx_mask(params: SieveParams, table: PrimeTable) -> np.ndarray:
    """
    mask[n] is set iff n <= x has a witness prime: p | n, p > threshold, p^2 does not divide n,
    gcd((p-1)/2, m) = 1 and no divisor d > 1 of n is 1 mod p
    """
    x = params.x
    _require_covered(x, table)
    mask = np.zeros(x + 1, dtype=bool)
    root = math.isqrt(x)
    for p in admissible_primes(params.m, x, params.threshold, table).tolist():
        if p > root:
            # n = p*k with k < p, so p does not divide k and no d = 1 mod p fits below x/p
            mask[p::p] = True
            continue
        # n = p*k; a divisor d = 1 mod p of n is prime to p and so divides k
        span = x // p
        bad = np.zeros(span + 1, dtype=bool)
        bad[p::p] = True
        for d in range(p + 1, span + 1, p):
            bad[d::d] = True
        good = np.flatnonzero(~bad[1:]) + 1
        mask[p * good] = True
    return mask


def count_b1(x: int, f_of_x: float, table: PrimeTable) -> ExceptionReport:
    """
    Integers n <= x with p^2 | n for some prime p > f(x), against the bound x / f(x)
    """
    if f_of_x < 2:
        raise InvalidArgumentException("f(x) must be at least 2, got %r" % f_of_x)
    count = int(np.count_nonzero(square_factor_mask(x, f_of_x, table)))
    return ExceptionReport(x, ExceptionKind.B1, count, x / f_of_x, {"f": f_of_x})


def count_b2(x: int, f_of_x: float, table: PrimeTable) -> ExceptionReport:
    """
    Integers n <= x with a prime p > f(x) dividing n and a divisor d > 1, d = 1 mod p,
    against the bound x (log x + 1) / f(x)
    """
    if f_of_x < 2:
        raise InvalidArgumentException("f(x) must be at least 2, got %r" % f_of_x)
    count = int(np.count_nonzero(congruent_divisor_mask(x, f_of_x, table)))
    return ExceptionReport(x, ExceptionKind.B2, count, x * (math.log(x) + 1) / f_of_x, {"f": f_of_x})


def smooth_part(x: int, g: float, table: PrimeTable) -> np.ndarray:
    """
    part[n] is the largest divisor of n whose prime factors are all below g
    """
    part = np.ones(x + 1, dtype=np.int64)
    primes = table.primes_up_to(min(x, table.limit))
    for p in primes[primes < g].tolist():
        power = p
        while power <= x:
            part[power::power] *= p
            power *= p
    return part


def count_b3(x: int, g_of_x: float, h_of_x: float, c: float, table: PrimeTable) -> ExceptionReport:
    """
    Integers n <= x with a divisor d >= h(x) whose prime factors are all below g(x),
    against the bound x (log g(x) + c) / log h(x)

    The report also carries the least constant for which count < bound would hold.
    """
    if g_of_x < 2 or h_of_x < 2:
        raise InvalidArgumentException("g(x) and h(x) must be at least 2, got %r and %r" % (g_of_x, h_of_x))
    if table.limit < min(x, math.ceil(g_of_x)):
        raise InvalidArgumentException("Prime table up to %d does not cover g(x) = %r" % (table.limit, g_of_x))
    # Some such divisor reaches h iff the whole g-smooth part of n does
    count = int(np.count_nonzero(smooth_part(x, g_of_x, table)[1:] >= h_of_x))
    bound = x * (math.log(g_of_x) + c) / math.log(h_of_x)
    minimal_c = count * math.log(h_of_x) / x - math.log(g_of_x)
    return ExceptionReport(x, ExceptionKind.B3, count, bound, {"g": g_of_x, "h": h_of_x, "c": c}, minimal_c)


def in_Kx(n: int, params: SieveParams, table: PrimeTable) -> Tuple[bool, Optional[int]]:
    """
    Returns
    -------
    (member, witness)
        Whether n belongs to K_x and, if so, its least witness prime
    """
    if not 1 <= n <= params.x:
        raise InvalidArgumentException("n must lie in 1..%d, got %d" % (params.x, n))
    factorization = factorize(n, table)
    threshold = params.threshold
    divs = None
    for p, nu in factorization:
        # Only odd primes carry the (p-1)/2 condition
        if p == 2 or p <= threshold or nu > 1 or gcd((p - 1) // 2, params.m) != 1:
            continue
        if divs is None:
            divs = divisors(factorization)
        if any(d % p == 1 for d in divs[1:]):
            continue
        return True, p
    return False, None


def kx_checkpoint(params: SieveParams, table: PrimeTable) -> Tuple[np.ndarray, KxCheckpoint]:
    x = params.x
    threshold = params.threshold
    members = kx_mask(params, table)
    in_s = prime_factor_mask(x, admissible_primes(params.m, x, threshold, table).tolist())
    out_g = congruent_divisor_mask(x, threshold, table)
    out_h = square_factor_mask(x, threshold, table)

    outside = ~members[1:]
    covered = ~in_s[1:] | out_g[1:] | out_h[1:]
    identity_holds = not bool(np.any(outside & ~covered))

    checkpoint = KxCheckpoint(x, threshold,
                              kx_count=int(np.count_nonzero(members[1:])),
                              comp_s=int(np.count_nonzero(~in_s[1:])),
                              comp_g=int(np.count_nonzero(out_g[1:])),
                              comp_h=int(np.count_nonzero(out_h[1:])),
                              activated=params.activated,
                              identity_holds=identity_holds)
    return members, checkpoint


def kx_series(params: SieveParams, checkpoints: Sequence[int], table: PrimeTable,
              listeners: Iterable[CheckpointListener] = ()) -> Tuple[DensitySeries, List[KxCheckpoint]]:
    """
    K_x counts and the three complement counts at each checkpoint; the threshold moves with x

    Parameters
    ----------
    params: SieveParams
        Template supplying delta and m; its x is replaced by each checkpoint
    checkpoints: Sequence[int]
        Ascending values of x
    table: PrimeTable
        Must cover the largest checkpoint
    listeners: Iterable[CheckpointListener]
    """
    listeners = list(listeners)
    rows = []
    counts = []
    for x in checkpoints:
        _, checkpoint = kx_checkpoint(params.at(x), table)
        if not checkpoint.identity_holds:
            log.error("Complement decomposition fails at x = %d" % x)
        rows.append(checkpoint)
        counts.append(checkpoint.kx_count)
        for listener in listeners:
            listener.on_checkpoint("K", x, checkpoint.kx_count)
    return DensitySeries(checkpoints, counts), rows


def complement_bound(params: SieveParams, checkpoints: Sequence[int], table: PrimeTable, epsilon: float,
                     listeners: Iterable[CheckpointListener] = ()) -> List[ComplementBoundReport]:
    """
    Compare |{1..x} minus K_x| with the B1 and B2 bounds plus the measured bad count
    """
    _, rows = kx_series(params, checkpoints, table, listeners)
    reports = []
    for checkpoint in rows:
        tk = tk_statistics(params.at(checkpoint.x), table, epsilon)
        reports.append(ComplementBoundReport(checkpoint, tk.n_bad, tk.activated))
    return reports

