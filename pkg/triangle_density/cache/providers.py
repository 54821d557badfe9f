import logging
import os
import tempfile
from abc import ABC, abstractmethod
from typing import Dict, Optional

from triangle_density.arith.sieve import PrimeTable, primes_up_to
from triangle_density.cache.codec import PrimeTableCodec
from triangle_density.config import Config
from triangle_density.errors import PrimeTableFormatException


def resolve_cache_dir(explicit: Optional[str] = None) -> str:
    """
    The command line path wins over the environment override, which wins over the default
    """
    if explicit:
        return explicit
    return os.environ.get(Config.cache_env_var) or Config.default_cache_dir


class PrimeTableProvider(ABC):
    @abstractmethod
    def table(self, limit: int) -> PrimeTable:
        """
        Parameters
        ----------
        limit: int
            Smallest acceptable table limit

        Returns
        -------
        table: PrimeTable
            A table whose limit is exactly the requested one
        """
        pass


class PrimeTableProviderImpl(PrimeTableProvider):
    log = logging.getLogger("PrimeTableProviderImpl")

    def __init__(self, codec: PrimeTableCodec, cache_dir: Optional[str], segment_size: int = Config.segment_size):
        """
        Parameters
        ----------
        codec: PrimeTableCodec
            Reads and writes the on-disk format
        cache_dir: str, optional
            Directory of cached tables; None keeps tables in memory only
        segment_size: int
            Sieve segment size used on a cache miss
        """
        self.codec = codec
        self.cache_dir = cache_dir
        self.segment_size = segment_size
        self._tables: Dict[int, PrimeTable] = {}

    def path_of(self, limit: int) -> str:
        return os.path.join(self.cache_dir, "primes-%d.tdpr" % limit)

    def load(self, limit: int) -> Optional[PrimeTable]:
        path = self.path_of(limit)
        if not os.path.exists(path):
            return None
        try:
            with open(path, "rb") as f:
                table = self.codec.decode(f.read())
        except (OSError, PrimeTableFormatException) as e:
            self.log.warning("Discarding cached table %s: %s" % (path, e))
            return None
        if table.limit != limit:
            self.log.warning("Discarding cached table %s: holds limit %d" % (path, table.limit))
            return None
        return table

    def store(self, table: PrimeTable) -> None:
        path = self.path_of(table.limit)
        try:
            os.makedirs(self.cache_dir, exist_ok=True)
            fd, temp_path = tempfile.mkstemp(dir=self.cache_dir, prefix=".primes-", suffix=".tmp")
            try:
                with os.fdopen(fd, "wb") as f:
                    f.write(self.codec.encode(table))
                os.replace(temp_path, path)
            except BaseException:
                os.unlink(temp_path)
                raise
        except OSError as e:
            self.log.warning("Could not persist table to %s: %s" % (path, e))
            return
        self.log.info("Cached prime table up to %d at %s" % (table.limit, path))

    def table(self, limit: int) -> PrimeTable:
        if limit in self._tables:
            return self._tables[limit]

        table = self.load(limit) if self.cache_dir is not None else None
        if table is None:
            self.log.info("Sieving primes up to %d" % limit)
            table = primes_up_to(limit, self.segment_size)
            if self.cache_dir is not None:
                self.store(table)
        self._tables[limit] = table
        return table
