import math
from typing import List, Tuple

from triangle_density.arith.sieve import PrimeTable
from triangle_density.errors import InvalidArgumentException
from triangle_density.models import Factorization


def factorize(n: int, table: PrimeTable) -> Factorization:
    """
    Factor n by dividing out table primes up to sqrt(n); one cofactor left above them is prime

    Parameters
    ----------
    n: int
        Positive integer, at most table.limit^2
    table: PrimeTable
    """
    if n < 1:
        raise InvalidArgumentException("Only positive integers can be factored, got %d" % n)
    if n > table.limit * table.limit:
        raise InvalidArgumentException("%d exceeds the square of the table limit %d" % (n, table.limit))

    factors: List[Tuple[int, int]] = []
    rest = n
    for p in table.primes_up_to(min(math.isqrt(n), table.limit)).tolist():
        if p * p > rest:
            break
        if rest % p == 0:
            nu = 0
            while rest % p == 0:
                rest //= p
                nu += 1
            factors.append((p, nu))
    if rest > 1:
        factors.append((rest, 1))
    return Factorization(n, factors)


def trial_factorize(n: int) -> Factorization:
    """
    Factor a small operand without a prime table
    """
    if n < 1:
        raise InvalidArgumentException("Only positive integers can be factored, got %d" % n)
    factors: List[Tuple[int, int]] = []
    rest = n
    d = 2
    while d * d <= rest:
        if rest % d == 0:
            nu = 0
            while rest % d == 0:
                rest //= d
                nu += 1
            factors.append((d, nu))
        d += 1 if d == 2 else 2
    if rest > 1:
        factors.append((rest, 1))
    return Factorization(n, factors)


def divisors(f: Factorization) -> List[int]:
    result = [1]
    for p, nu in f:
        result = [d * p ** k for d in result for k in range(nu + 1)]
    return sorted(result)


def euler_phi(f: Factorization) -> int:
    result = 1
    for p, nu in f:
        result *= p ** (nu - 1) * (p - 1)
    return result
