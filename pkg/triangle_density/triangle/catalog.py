import logging
from typing import Dict, Iterable, List, Optional, Set

from triangle_density.arith import PrimeTable
from triangle_density.bertram import in_Kx
from triangle_density.config import Config
from triangle_density.errors import BudgetExhaustedException, InvalidArgumentException, \
    InvariantViolationException
from triangle_density.models import CosetTable, CrossCheckReport, ExclusionHit, QuotientCatalog, SieveParams, \
    TriangleSignature
from triangle_density.triangle.coset import SearchBudget, SearchEventListener, low_index_tables
from triangle_density.triangle.exclusion import prop_b_excludes
from triangle_density.triangle.perm_group import image_order, perm_order

log = logging.getLogger(__name__)


def is_smooth(table: CosetTable, signature: TriangleSignature) -> bool:
    """
    Whether x, y and xy act with orders exactly r, s and t
    """
    return (perm_order(table.x_action) == signature.r
            and perm_order(table.y_action) == signature.s
            and perm_order(table.xy_action) == signature.t)


class _CatalogBuilder(object):
    def __init__(self, signature: TriangleSignature, max_order: int, max_index: int):
        self.signature = signature
        self.max_order = max_order
        self.max_index = max_index
        self.provenance: Dict[int, int] = {}
        self.smooth: Set[int] = set()
        self.complete_up_to = 0

    def record(self, order: int, degree: int, smooth: bool) -> None:
        if order not in self.provenance or degree < self.provenance[order]:
            self.provenance[order] = degree
        if smooth:
            self.smooth.add(order)

    def build(self, partial: bool) -> QuotientCatalog:
        return QuotientCatalog(self.signature, self.max_index, self.complete_up_to, self.provenance,
                               sorted(self.smooth), partial)


def _harvest(builder: _CatalogBuilder, listeners: List[SearchEventListener]) -> None:
    """
    Images of small-index coset tables of arbitrary subgroups; they may reach orders far above their degree
    """
    index = min(builder.max_index, Config.harvest_index)
    budget = SearchBudget(Config.harvest_budget)
    try:
        for table in low_index_tables(builder.signature, index, budget, listeners=listeners):
            order = image_order(table, cap=builder.max_order)
            if order is not None:
                builder.record(order, table.degree, is_smooth(table, builder.signature))
    except BudgetExhaustedException as e:
        log.warning("Harvest for %r stopped early: %s" % (builder.signature, e))


def quotient_orders(signature: TriangleSignature, max_order: int, max_index: int,
                    budget: Optional[SearchBudget] = None,
                    listeners: Iterable[SearchEventListener] = ()) -> QuotientCatalog:
    """
    Orders <= max_order of the finite quotients of the ordinary triangle group

    A quotient of order q acts regularly on itself, so a search for regular coset tables of
    exact degree q, run for every q <= max_order, decides whether q is an order.

    Parameters
    ----------
    signature: TriangleSignature
    max_order: int
        Largest order listed
    max_index: int
        Largest coset table degree searched; at least max_order
    budget: SearchBudget, optional
        Node cap shared by the regular searches
    listeners: Iterable[SearchEventListener]

    Raises
    ------
    BudgetExhaustedException
        Its partial attribute is the catalog built so far, flagged partial
    """
    if max_order < 1:
        raise InvalidArgumentException("max_order must be positive, got %d" % max_order)
    if max_index < max_order:
        raise InvalidArgumentException("max_index (%d) must be at least max_order (%d)" % (max_index, max_order))
    budget = budget if budget is not None else SearchBudget()
    listeners = list(listeners)

    builder = _CatalogBuilder(signature, max_order, max_index)
    _harvest(builder, listeners)

    for q in range(1, max_order + 1):
        try:
            for table in low_index_tables(signature, q, budget, normal_only=True, exact_index=True,
                                          listeners=listeners):
                order = image_order(table)
                if order != q:
                    raise InvariantViolationException("Regular table of degree %d has image of order %d" % (q, order))
                smooth = is_smooth(table, signature)
                builder.record(q, q, smooth)
                if smooth:
                    break
        except BudgetExhaustedException as e:
            catalog = builder.build(partial=True)
            log.warning("Quotient orders of %r complete only up to %d" % (signature, builder.complete_up_to))
            raise BudgetExhaustedException("Regular search for %r stopped at order %d: %s" % (signature, q, e),
                                           partial=catalog)
        builder.complete_up_to = q

    return builder.build(partial=False)


def cross_check(signature: TriangleSignature, params: SieveParams, max_n: int, max_index: int, table: PrimeTable,
                budget: Optional[SearchBudget] = None,
                listeners: Iterable[SearchEventListener] = ()) -> CrossCheckReport:
    """
    Confront the arithmetic exclusions with the enumerated quotient orders on 1..max_n

    An n excluded by the direct certificate, or lying in K_x once the threshold exceeds r*s*t,
    that nevertheless occurs as a quotient order is a violation. A budget overrun yields a report
    over the partial catalog, flagged partial.
    """
    if max_n < 1:
        raise InvalidArgumentException("max_n must be positive, got %d" % max_n)
    if params.x < max_n:
        raise InvalidArgumentException("x (%d) must be at least max_n (%d)" % (params.x, max_n))
    if max_index < max_n:
        raise InvalidArgumentException("max_index (%d) must be at least max_n (%d)" % (max_index, max_n))

    try:
        catalog = quotient_orders(signature, max_n, max_index, budget, listeners)
    except BudgetExhaustedException as e:
        catalog = e.partial

    hits = []
    violations = []
    inactive_hits = []
    for n in range(1, max_n + 1):
        kx, kx_witness = in_Kx(n, params, table)
        excluded, witness = prop_b_excludes(n, signature, table)
        if not (kx or excluded):
            continue
        hits.append(ExclusionHit(n, kx_witness, witness))
        if n not in catalog:
            continue
        if excluded or params.activated:
            log.error("%d is excluded for %r yet occurs as a quotient order" % (n, signature))
            violations.append(n)
        else:
            inactive_hits.append(n)

    return CrossCheckReport(signature, max_n, params.activated, hits, catalog, violations, inactive_hits)
