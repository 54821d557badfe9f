from typing import Optional

from triangle_density.cache import DefaultPrimeTableCodec, PrimeTableProvider, PrimeTableProviderImpl, \
    resolve_cache_dir
from triangle_density.config import Config
from triangle_density.event_logger import EventLogger
from triangle_density.runner import ReportRunner, Runner
from triangle_density.writers import CsvReportWriter, JsonReportWriter


def build_runner(cache_dir: Optional[str] = None) -> Runner:
    """
    Build a report runner

    Parameters
    ----------
    cache_dir: str, optional
        Prime table cache directory; the environment override or the default when omitted

    Returns
    -------
    runner: Runner
        A runner reading prime tables through the cache and logging progress
    """
    cfg = Config
    event_logger = EventLogger()
    provider: PrimeTableProvider = PrimeTableProviderImpl(DefaultPrimeTableCodec(), resolve_cache_dir(cache_dir),
                                                          cfg.segment_size)
    writers = {"csv": CsvReportWriter(), "json": JsonReportWriter()}
    return ReportRunner(provider, writers, checkpoint_listeners=[event_logger], search_listeners=[event_logger])
