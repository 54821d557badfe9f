import logging
import math
from functools import cached_property

import numpy as np

from triangle_density.config import Config
from triangle_density.errors import InvalidArgumentException

log = logging.getLogger(__name__)


class PrimeTable(object):
    def __init__(self, limit: int, bits: np.ndarray):
        """
        Parameters
        ----------
        limit: int
            Inclusive upper bound of the table
        bits: np.ndarray
            Packed primality of the odd numbers 3, 5, 7, ... as little-endian uint64 words,
            bit i of the stream standing for 2i + 3
        """
        if limit < 2:
            raise InvalidArgumentException("Prime table limit must be at least 2, got %d" % limit)
        expected = word_count(limit)
        if len(bits) != expected:
            raise InvalidArgumentException("A table up to %d needs %d words, got %d" % (limit, expected, len(bits)))

        self.limit = limit
        self.bits: np.ndarray = np.ascontiguousarray(bits, dtype="<u8")
        self.bits.setflags(write=False)

    @property
    def odd_count(self) -> int:
        """
        Number of odd entries 3..limit covered by the bitmap
        """
        return odd_count(self.limit)

    @cached_property
    def odd_mask(self) -> np.ndarray:
        """
        Boolean view of the bitmap, entry i standing for 2i + 3
        """
        mask = np.unpackbits(self.bits.view(np.uint8), bitorder="little")[:self.odd_count].astype(bool)
        mask.setflags(write=False)
        return mask

    @cached_property
    def primes(self) -> np.ndarray:
        odd = np.flatnonzero(self.odd_mask).astype(np.int64) * 2 + 3
        primes = np.concatenate((np.array([2], dtype=np.int64), odd))
        primes.setflags(write=False)
        return primes

    def is_prime(self, n: int) -> bool:
        if n > self.limit:
            raise InvalidArgumentException("%d lies beyond the table limit %d" % (n, self.limit))
        if n == 2:
            return True
        if n < 3 or n % 2 == 0:
            return False
        i = (n - 3) // 2
        return bool((int(self.bits[i >> 6]) >> (i & 63)) & 1)

    def count(self, x: int) -> int:
        """
        pi(x) for x <= limit
        """
        if x > self.limit:
            raise InvalidArgumentException("%d lies beyond the table limit %d" % (x, self.limit))
        return int(np.searchsorted(self.primes, x, side="right"))

    def primes_up_to(self, x: int) -> np.ndarray:
        return self.primes[:self.count(x)]

    def mask(self, x: int) -> np.ndarray:
        """
        Boolean array of length x + 1 with mask[n] set iff n is prime
        """
        if x > self.limit:
            raise InvalidArgumentException("%d lies beyond the table limit %d" % (x, self.limit))
        result = np.zeros(x + 1, dtype=bool)
        result[self.primes_up_to(x)] = True
        return result

    def __eq__(self, other) -> bool:
        return isinstance(other, PrimeTable) and self.limit == other.limit and np.array_equal(self.bits, other.bits)

    def __repr__(self) -> str:
        return "PrimeTable(limit=%d)" % self.limit


def odd_count(limit: int) -> int:
    return max(0, (limit - 1) // 2)


def word_count(limit: int) -> int:
    return (odd_count(limit) + 63) // 64


def _base_primes(bound: int) -> np.ndarray:
    """
    Odd primes up to bound with a plain one-shot sieve
    """
    if bound < 3:
        return np.array([], dtype=np.int64)
    is_prime = np.ones(bound + 1, dtype=bool)
    is_prime[:2] = False
    is_prime[4::2] = False
    for i in range(3, math.isqrt(bound) + 1, 2):
        if is_prime[i]:
            is_prime[i * i::2 * i] = False
    return np.flatnonzero(is_prime[3:]).astype(np.int64) + 3


def primes_up_to(limit: int, segment_size: int = Config.segment_size) -> PrimeTable:
    """
    Build the prime table up to limit with a segmented odd-only sieve

    Parameters
    ----------
    limit: int
        Inclusive upper bound, at least 2
    segment_size: int
        Odd entries sieved per segment; rounded up to a multiple of 64

    Returns
    -------
    table: PrimeTable
    """
    if limit < 2:
        raise InvalidArgumentException("Prime table limit must be at least 2, got %d" % limit)
    if segment_size < 1:
        raise InvalidArgumentException("Segment size must be positive, got %d" % segment_size)
    segment_size = (segment_size + 63) // 64 * 64

    total = odd_count(limit)
    base = _base_primes(math.isqrt(limit))
    chunks = []

    for lo in range(0, total, segment_size):
        hi = min(lo + segment_size, total)
        segment = np.ones(hi - lo, dtype=bool)
        low_value = 2 * lo + 3
        high_value = 2 * (hi - 1) + 3

        for p in base.tolist():
            square = p * p
            if square > high_value:
                break
            # First odd multiple of p in the segment, never below p^2
            start = max(square, (low_value + p - 1) // p * p)
            if start % 2 == 0:
                start += p
            segment[(start - 3) // 2 - lo::p] = False

        padding = (-len(segment)) % 64
        if padding:
            segment = np.concatenate((segment, np.zeros(padding, dtype=bool)))
        chunks.append(np.packbits(segment, bitorder="little"))

    packed = np.concatenate(chunks) if chunks else np.zeros(0, dtype=np.uint8)
    bits = packed.view("<u8").copy()
    log.debug("Sieved %d odd entries up to %d in %d segments" % (total, limit, len(chunks)))
    return PrimeTable(limit, bits)
