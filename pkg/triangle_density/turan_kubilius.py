import logging
from typing import Collection, Iterable, List, Sequence, Tuple

import numpy as np

from triangle_density.arith import PrimeTable, trial_factorize
from triangle_density.density import CheckpointListener
from triangle_density.dirichlet import admissible_primes
from triangle_density.errors import InvalidArgumentException, InvariantViolationException
from triangle_density.models import DensitySeries, SieveParams, SxCheckpoint, TKReport
from triangle_density.summation import CompensatedSum, reciprocal_sum

log = logging.getLogger(__name__)

# Largest tolerated gap between A(x) and B(x)^2 - G(x)
IDENTITY_TOLERANCE = 1e-12


def f_omega(n: int, px: Collection[int]) -> int:
    """
    Number of distinct primes of P_x dividing n

    Parameters
    ----------
    n: int
    px: Collection[int]
        P_x; a set keeps the membership test cheap
    """
    if n < 1:
        raise InvalidArgumentException("n must be positive, got %d" % n)
    return sum(1 for p in trial_factorize(n).primes if p in px)


def omega_counts(x: int, px: np.ndarray) -> np.ndarray:
    """
    f[n] for every n <= x, one pass over the multiples of each p in P_x
    """
    f = np.zeros(x + 1, dtype=np.int16)
    for p in px.tolist():
        f[p::p] += 1
    return f


def _prime_power_sums(px: np.ndarray, x: int) -> Tuple[float, float, float]:
    """
    B(x)^2, G(x) and A(x) over the prime powers p^v <= x with p in P_x
    """
    b2 = CompensatedSum()
    g = CompensatedSum()
    a = CompensatedSum()
    bases = px.astype(np.int64)
    powers = bases.copy()
    while len(powers):
        inverse = 1.0 / powers.astype(np.float64)
        reciprocal_bases = 1.0 / bases.astype(np.float64)
        b2.extend(inverse.tolist())
        g.extend((inverse * reciprocal_bases).tolist())
        a.extend((inverse * (1.0 - reciprocal_bases)).tolist())
        powers = powers * bases
        keep = powers <= x
        powers = powers[keep]
        bases = bases[keep]
    return b2.value, g.value, a.value


def tk_statistics(params: SieveParams, table: PrimeTable, epsilon: float) -> TKReport:
    """
    Statistics of the additive function counting the prime factors of n that lie in P_x

    Parameters
    ----------
    params: SieveParams
        Supplies x, delta, m and the threshold (log x)^(1+delta)
    table: PrimeTable
        Must cover x
    epsilon: float
        Exponent offset of the bad-integer cut B(x)^(1+epsilon)

    Raises
    ------
    InvariantViolationException
        When A(x) and B(x)^2 - G(x) drift apart beyond summation tolerance
    """
    x = params.x
    if x < 16:
        raise InvalidArgumentException("x must be at least 16, got %d" % x)
    if not epsilon > 0:
        raise InvalidArgumentException("epsilon must be positive, got %r" % epsilon)

    px = admissible_primes(params.m, x, params.threshold, table)
    if len(px) == 0:
        log.warning("P_x is empty at x = %d, m = %d; x is too small" % (x, params.m))
        return TKReport(x, params.m, params.delta, epsilon, 0, 0.0, 0.0, 0.0, 0.0, 0, 0.0, [x])

    b2, g, a = _prime_power_sums(px, x)
    if abs(a - (b2 - g)) > IDENTITY_TOLERANCE:
        raise InvariantViolationException("A(x) = %r but B(x)^2 - G(x) = %r at x = %d" % (a, b2 - g, x))

    counts = np.bincount(omega_counts(x, px)[1:])
    values = np.arange(len(counts), dtype=np.float64)
    deviation = np.abs(values - a)

    lhs = CompensatedSum()
    lhs.extend((counts * deviation ** 2).tolist())
    cut = b2 ** ((1 + epsilon) / 2)
    n_bad = int(counts[deviation >= cut].sum())

    report = TKReport(x, params.m, params.delta, epsilon, len(px), a, b2, g, lhs.value / x, n_bad,
                      reciprocal_sum(px), counts.tolist())
    log.debug("TK statistics at x = %d: A = %r, B2 = %r, G = %r, ratio = %r" % (x, a, b2, g, report.ratio))
    return report


def tk_inequality_check(report: TKReport, margin: float) -> Tuple[bool, float]:
    """
    Returns
    -------
    (holds, ratio)
        Whether lhs <= margin * B(x)^2, and the measured lhs / B(x)^2
    """
    if not report.b2 > 0:
        raise InvalidArgumentException("B(x)^2 must be positive, P_x is empty at x = %d" % report.x)
    return report.lhs <= margin * report.b2, report.ratio


def sx_series(params: SieveParams, checkpoints: Sequence[int], table: PrimeTable, epsilon: float,
              listeners: Iterable[CheckpointListener] = ()) -> Tuple[DensitySeries, List[SxCheckpoint]]:
    """
    d_x(S_x) at each checkpoint, with S_x = {n <= x : f(n) >= 1} and the threshold moving with x
    """
    listeners = list(listeners)
    rows = []
    for x in checkpoints:
        report = tk_statistics(params.at(x), table, epsilon)
        row = SxCheckpoint(x, x - report.complement_s, report.n_bad, report.activated)
        if row.tk_activated and not row.bound_holds:
            log.error("S_x complement %d exceeds the bad count %d at x = %d" % (row.complement, row.n_bad, x))
        rows.append(row)
        for listener in listeners:
            listener.on_checkpoint("S", x, row.count)
    return DensitySeries(checkpoints, [row.count for row in rows]), rows
