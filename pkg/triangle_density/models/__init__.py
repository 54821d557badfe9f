from triangle_density.models.arith_objects import Factorization, ProgressionClass
from triangle_density.models.group_objects import Geometry, TriangleSignature, CosetTable, QuotientCatalog, \
    ExclusionHit, CrossCheckReport
from triangle_density.models.report_objects import LogSizeReport, InfntsizePrimes, TKReport, SxCheckpoint
from triangle_density.models.run_objects import RunConfig, ExitStatus
from triangle_density.models.series_objects import DensitySeries, format_real
from triangle_density.models.sieve_objects import SieveParams, ExceptionKind, ExceptionReport, KxCheckpoint, \
    ComplementBoundReport, rows_of
