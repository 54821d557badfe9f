from math import gcd
from typing import Optional, Tuple

from triangle_density.arith import PrimeTable, divisors, factorize
from triangle_density.errors import InvalidArgumentException
from triangle_density.models import TriangleSignature


def prop_b_excludes(n: int, sig: TriangleSignature, table: PrimeTable) -> Tuple[bool, Optional[int]]:
    """
    Arithmetic certificate that n is not the order of a finite quotient of the ordinary triangle group

    A prime p certifies n when p exactly divides n, no divisor d > 1 of n is 1 mod p,
    none of r, s, t is divisible by p and at least two of them are prime to (p-1)/2.

    Returns
    -------
    (excluded, witness)
        Whether a certifying prime exists, and the least one
    """
    if n < 1:
        raise InvalidArgumentException("n must be positive, got %d" % n)
    factorization = factorize(n, table)
    orders = sig.as_list()
    divs = None
    for p, nu in factorization:
        if nu > 1 or any(e % p == 0 for e in orders):
            continue
        # (p-1)/2 is not an integer at p = 2; the condition is taken as met
        half = (p - 1) // 2 if p > 2 else 1
        if sum(1 for e in orders if gcd(e, half) == 1) < 2:
            continue
        if divs is None:
            divs = divisors(factorization)
        if any(d % p == 1 for d in divs[1:]):
            continue
        return True, p
    return False, None
