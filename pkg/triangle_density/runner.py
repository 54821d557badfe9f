import logging
import math
import sys
from abc import ABC, abstractmethod
from typing import Callable, Dict, List, Optional, Sequence

from triangle_density.bertram import complement_bound, count_b1, count_b2, count_b3, kx_series
from triangle_density.cache import PrimeTableProvider
from triangle_density.config import Config
from triangle_density.density import CheckpointListener
from triangle_density.dirichlet import logsize_vs_asymptote, threshold_of, truncated_logsize
from triangle_density.errors import BudgetExhaustedException, InvalidArgumentException, \
    InvariantViolationException, PrimeTableFormatException
from triangle_density.models import ComplementBoundReport, DensitySeries, ExceptionReport, ExitStatus, \
    KxCheckpoint, LogSizeReport, ProgressionClass, RunConfig, SieveParams, SxCheckpoint, TKReport, rows_of
from triangle_density.plotting import plot_rows
from triangle_density.triangle.catalog import cross_check, quotient_orders
from triangle_density.triangle.coset import SearchBudget, SearchEventListener
from triangle_density.triangle.signature import euclidean_density_series
from triangle_density.turan_kubilius import sx_series, tk_inequality_check, tk_statistics
from triangle_density.writers import ReportWriter


class Report(object):
    def __init__(self, status: ExitStatus, fields: Sequence[str] = (), rows: Optional[List[Dict[str, str]]] = None,
                 document: Optional[dict] = None, plot_fields: Sequence[str] = ()):
        self.status = status
        self.fields = fields
        self.rows = rows
        """
        Table rows; None for a structured document
        """

        self.document = document
        self.plot_fields = plot_fields
        """
        Columns drawn against x when a figure is requested
        """


class Runner(ABC):
    @abstractmethod
    def run(self, config: RunConfig) -> ExitStatus:
        """
        Run one subcommand and write its report

        Parameters
        ----------
        config: RunConfig
            The invocation, validated before anything is computed

        Returns
        -------
        status: ExitStatus
        """
        pass


class ReportRunner(Runner):
    log = logging.getLogger("ReportRunner")

    def __init__(self, provider: PrimeTableProvider, writers: Dict[str, ReportWriter],
                 checkpoint_listeners: List[CheckpointListener],
                 search_listeners: List[SearchEventListener]):
        """
        Parameters
        ----------
        provider: PrimeTableProvider
            Source of cached prime tables
        writers: Dict[str, ReportWriter]
            Writer per output format
        checkpoint_listeners: List[CheckpointListener]
        search_listeners: List[SearchEventListener]
        """
        self.provider = provider
        self.writers = writers
        self.checkpoint_listeners = checkpoint_listeners
        self.search_listeners = search_listeners

        self.handlers: Dict[str, Callable[[RunConfig], Report]] = {
            "kx-series": self.kx_series,
            "tk-report": self.tk_report,
            "bertram-check": self.bertram_check,
            "dirichlet-logsize": self.dirichlet_logsize,
            "quotient-orders": self.quotient_orders,
            "cross-check": self.cross_check,
            "euclidean-density": self.euclidean_density,
            "sx-series": self.sx_series,
            "complement-bound": self.complement_bound,
        }

    def run(self, config: RunConfig) -> ExitStatus:
        try:
            config.validate()
            report = self.handlers[config.command](config)
            self.emit(config, report)
        except (InvalidArgumentException, PrimeTableFormatException) as e:
            self.log.error("Invalid argument: %s" % e)
            return ExitStatus.INVALID_ARGUMENT
        except InvariantViolationException as e:
            self.log.error("Invariant violated: %s" % e)
            return ExitStatus.INVARIANT_VIOLATION
        except BudgetExhaustedException as e:
            self.log.error("Budget exhausted: %s" % e)
            return ExitStatus.BUDGET_EXHAUSTED
        except OSError as e:
            self.log.error("Cannot write output: %s" % e)
            return ExitStatus.INVALID_ARGUMENT
        if report.status != ExitStatus.OK:
            self.log.error("%s finished with status %d (%s)" % (config.command, report.status, report.status.name))
        return report.status

    def emit(self, config: RunConfig, report: Report) -> None:
        writer = self.writers[config.output_format]
        stream = open(config.out, "w", newline="") if config.out is not None else sys.stdout
        try:
            if report.document is not None:
                writer.write_document(stream, report.document)
            else:
                writer.write_table(stream, report.fields, report.rows)
        finally:
            if stream is not sys.stdout:
                stream.close()
            else:
                stream.flush()

        if config.plot is not None:
            if report.rows is None or not report.plot_fields:
                self.log.warning("Nothing to plot for %s" % config.command)
            else:
                subject = config.signature if config.signature is not None else config.kind
                title = config.command if subject is None else "%s %r" % (config.command, subject)
                plot_rows(config.plot, report.rows, "x", report.plot_fields, title)

    def _table(self, limit: int):
        return self.provider.table(max(limit, 2))

    def _params(self, config: RunConfig, x: int) -> SieveParams:
        return SieveParams(x, config.delta, config.signature)

    def kx_series(self, config: RunConfig) -> Report:
        table = self._table(config.max_checkpoint)
        _, rows = kx_series(self._params(config, config.max_checkpoint), config.checkpoints, table,
                            self.checkpoint_listeners)
        status = ExitStatus.OK
        for row in rows:
            if not row.identity_holds:
                status = ExitStatus.INVARIANT_VIOLATION
            # The square-factor and congruent-divisor counts are the two exceptional sets at f = threshold
            if row.threshold >= 2 and not (row.comp_h < row.b1_bound and row.comp_g < row.b2_bound):
                self.log.error("Exceptional set bound fails at x = %d: %d vs %r, %d vs %r"
                               % (row.x, row.comp_h, row.b1_bound, row.comp_g, row.b2_bound))
                status = ExitStatus.INVARIANT_VIOLATION
        return Report(status, KxCheckpoint.fields, rows_of(rows), plot_fields=("kx_ratio",))

    def tk_report(self, config: RunConfig) -> Report:
        table = self._table(config.max_checkpoint)
        status = ExitStatus.OK
        reports: List[TKReport] = []
        for x in config.checkpoints:
            report = tk_statistics(self._params(config, x), table, config.epsilon)
            reports.append(report)
            if report.empty:
                continue
            if not report.sandwich_holds:
                self.log.error("G, A, B^2 out of order at x = %d: G = %r, A = %r, B^2 = %r"
                               % (x, report.g, report.a, report.b2))
                status = ExitStatus.INVARIANT_VIOLATION
            if not report.exceeds_logsize:
                self.log.error("B^2 = %r is below the logarithmic size %r of P_x at x = %d"
                               % (report.b2, report.px_logsize, x))
                status = ExitStatus.INVARIANT_VIOLATION
            holds, ratio = tk_inequality_check(report, config.margin)
            if ratio > Config.tk_ceiling:
                self.log.error("Variance ratio %r exceeds the ceiling %r at x = %d" % (ratio, Config.tk_ceiling, x))
                status = ExitStatus.INVARIANT_VIOLATION
            elif not holds:
                self.log.warning("Variance ratio %r exceeds the margin %r at x = %d" % (ratio, config.margin, x))
        return Report(status, TKReport.fields, rows_of(reports), plot_fields=("ratio",))

    def bertram_check(self, config: RunConfig) -> Report:
        table = self._table(config.max_checkpoint)
        status = ExitStatus.OK
        reports: List[ExceptionReport] = []
        for x in config.checkpoints:
            f = threshold_of(x, config.delta)
            b1 = count_b1(x, f, table)
            b2 = count_b2(x, f, table)
            b3 = count_b3(x, f, math.sqrt(x), config.b3_constant, table)
            for report in (b1, b2):
                if not report.holds:
                    self.log.error("%s count %d is not below %r at x = %d"
                                   % (report.kind.name, report.count, report.bound, x))
                    status = ExitStatus.INVARIANT_VIOLATION
            if not b3.holds:
                self.log.warning("B3 needs c >= %r at x = %d, got c = %r" % (b3.minimal_c, x, config.b3_constant))
            reports.extend((b1, b2, b3))
        return Report(status, ExceptionReport.fields, rows_of(reports))

    def dirichlet_logsize(self, config: RunConfig) -> Report:
        cls = ProgressionClass(config.residue, config.modulus)
        table = self._table(config.max_checkpoint)
        reports: List[LogSizeReport] = []
        for x in config.checkpoints:
            if config.truncated:
                reports.append(truncated_logsize(cls, x, config.delta, table))
            else:
                reports.append(logsize_vs_asymptote(cls, x, table))
        # Truncation moves with x, so only the full class sum is monotone
        if not config.truncated and any(a.ell > b.ell for a, b in zip(reports, reports[1:])):
            raise InvariantViolationException("Logarithmic size of %r decreases along %s" % (cls, config.checkpoints))
        return Report(ExitStatus.OK, LogSizeReport.fields, rows_of(reports), plot_fields=("ell", "predicted"))

    def quotient_orders(self, config: RunConfig) -> Report:
        max_order = config.max_order if config.max_order is not None else config.max_index
        try:
            catalog = quotient_orders(config.signature, max_order, config.max_index, SearchBudget(config.budget),
                                      self.search_listeners)
        except BudgetExhaustedException as e:
            self.log.error(str(e))
            return Report(ExitStatus.BUDGET_EXHAUSTED, document=e.partial.document())
        return Report(ExitStatus.OK, document=catalog.document())

    def cross_check(self, config: RunConfig) -> Report:
        table = self._table(config.max_n)
        report = cross_check(config.signature, self._params(config, config.x), config.max_n, config.max_index,
                             table, SearchBudget(config.budget), self.search_listeners)
        if report.violations:
            status = ExitStatus.INVARIANT_VIOLATION
        elif report.partial:
            status = ExitStatus.BUDGET_EXHAUSTED
        else:
            status = ExitStatus.OK
        return Report(status, document=report.document())

    def euclidean_density(self, config: RunConfig) -> Report:
        series = euclidean_density_series(config.kind, config.checkpoints, self.checkpoint_listeners)
        return Report(ExitStatus.OK, DensitySeries.fields, series.rows(), plot_fields=("ratio",))

    def sx_series(self, config: RunConfig) -> Report:
        table = self._table(config.max_checkpoint)
        _, rows = sx_series(self._params(config, config.max_checkpoint), config.checkpoints, table,
                            config.epsilon, self.checkpoint_listeners)
        status = ExitStatus.OK
        if any(row.tk_activated and not row.bound_holds for row in rows):
            status = ExitStatus.INVARIANT_VIOLATION
        return Report(status, SxCheckpoint.fields, rows_of(rows), plot_fields=("ratio",))

    def complement_bound(self, config: RunConfig) -> Report:
        table = self._table(config.max_checkpoint)
        reports = complement_bound(self._params(config, config.max_checkpoint), config.checkpoints, table,
                                   config.epsilon, self.checkpoint_listeners)
        status = ExitStatus.OK
        for report in reports:
            if report.tk_activated and not report.holds:
                self.log.error("Complement %d exceeds N(x) = %r at x = %d"
                               % (report.checkpoint.complement, report.n_measured, report.checkpoint.x))
                status = ExitStatus.INVARIANT_VIOLATION
            if not report.checkpoint.identity_holds:
                status = ExitStatus.INVARIANT_VIOLATION
        return Report(status, ComplementBoundReport.fields, rows_of(reports), plot_fields=("complement", "n_measured"))
