from math import gcd
from typing import Iterator, List, Tuple

from triangle_density.errors import InvalidArgumentException


class Factorization(object):
    def __init__(self, n: int, factors: List[Tuple[int, int]]):
        self.n = n
        """
        The factored positive integer
        """

        self.factors: Tuple[Tuple[int, int], ...] = tuple(factors)
        """
        (prime, exponent) pairs with strictly increasing primes and exponents >= 1
        """

    @property
    def primes(self) -> List[int]:
        return [p for p, _ in self.factors]

    def exponent(self, p: int) -> int:
        for q, nu in self.factors:
            if q == p:
                return nu
        return 0

    def __iter__(self) -> Iterator[Tuple[int, int]]:
        return iter(self.factors)

    def __len__(self) -> int:
        return len(self.factors)

    def __eq__(self, other) -> bool:
        return isinstance(other, Factorization) and self.n == other.n and self.factors == other.factors

    def __repr__(self) -> str:
        return "Factorization(%d, %s)" % (self.n, list(self.factors))


class ProgressionClass(object):
    def __init__(self, a: int, b: int):
        if a < 1 or b < 1:
            raise InvalidArgumentException("Residue and modulus must be positive, got %d mod %d" % (a, b))
        if gcd(a, b) != 1:
            raise InvalidArgumentException("Residue %d and modulus %d are not coprime" % (a, b))

        self.a = a
        """
        The residue
        """

        self.b = b
        """
        The modulus
        """

    def __repr__(self) -> str:
        return "%d mod %d" % (self.a, self.b)
