import logging

from triangle_density.density import CheckpointListener
from triangle_density.models import CosetTable, TriangleSignature
from triangle_density.triangle.coset import SearchEventListener


class EventLogger(CheckpointListener, SearchEventListener):
    log = logging.getLogger("EventLogger")

    def __init__(self) -> None:
        super().__init__()
        self.tables_found = 0
        self.nodes = 0

    def on_checkpoint(self, series: str, x: int, count: int) -> None:
        self.log.info("%s: x = %d, count = %d, ratio = %.6f" % (series, x, count, count / x))

    def on_table_found(self, signature: TriangleSignature, table: CosetTable) -> None:
        self.tables_found += 1
        self.log.debug("%r: coset table of degree %d" % (signature, table.degree))

    def on_search_finished(self, signature: TriangleSignature, max_index: int, nodes: int) -> None:
        self.nodes += nodes
        self.log.debug("%r: search up to index %d finished after %d nodes" % (signature, max_index, nodes))
