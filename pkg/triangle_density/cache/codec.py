import logging
import struct
from abc import ABC, abstractmethod

import numpy as np

from triangle_density.arith.sieve import PrimeTable, word_count
from triangle_density.config import Config
from triangle_density.errors import PrimeTableFormatException


class PrimeTableCodec(ABC):
    @abstractmethod
    def encode(self, table: PrimeTable) -> bytes:
        pass

    @abstractmethod
    def decode(self, content: bytes) -> PrimeTable:
        """
        Raises
        ------
        PrimeTableFormatException
            When the content is not a well-formed table of this format
        """
        pass


class DefaultPrimeTableCodec(PrimeTableCodec):
    """
    Layout: magic (4 bytes), version (<I), limit (<Q), then the odd bitmap as <u8 words
    """
    log = logging.getLogger("DefaultPrimeTableCodec")

    header = struct.Struct("<4sIQ")

    def __init__(self, magic: bytes = Config.cache_magic, version: int = Config.cache_version):
        self.magic = magic
        self.version = version

    def encode(self, table: PrimeTable) -> bytes:
        return self.header.pack(self.magic, self.version, table.limit) + table.bits.astype("<u8").tobytes()

    def decode(self, content: bytes) -> PrimeTable:
        if len(content) < self.header.size:
            raise PrimeTableFormatException("Truncated header: %d bytes" % len(content))
        magic, version, limit = self.header.unpack_from(content)
        if magic != self.magic:
            raise PrimeTableFormatException("Bad magic %r" % magic)
        if version != self.version:
            raise PrimeTableFormatException("Unsupported format version %d" % version)
        if limit < 2:
            raise PrimeTableFormatException("Invalid limit %d" % limit)

        payload = content[self.header.size:]
        expected = word_count(limit) * 8
        if len(payload) != expected:
            raise PrimeTableFormatException("Payload holds %d bytes, limit %d needs %d" % (len(payload), limit, expected))

        bits = np.frombuffer(payload, dtype="<u8").copy()
        self.log.debug("Decoded table up to %d" % limit)
        return PrimeTable(limit, bits)
