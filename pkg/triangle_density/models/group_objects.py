from enum import Enum
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from triangle_density.errors import InvalidArgumentException


class Geometry(Enum):
    SPHERICAL = 0
    EUCLIDEAN = 1
    HYPERBOLIC = 2


class TriangleSignature(object):
    def __init__(self, r: int, s: int, t: int):
        if min(r, s, t) < 1:
            raise InvalidArgumentException("Signature entries must be positive, got (%d,%d,%d)" % (r, s, t))

        self.r = r
        """
        Order of x
        """

        self.s = s
        """
        Order of y
        """

        self.t = t
        """
        Order of xy
        """

    @property
    def m(self) -> int:
        return self.r * self.s * self.t

    @property
    def reciprocal_sum(self) -> Fraction:
        return Fraction(1, self.r) + Fraction(1, self.s) + Fraction(1, self.t)

    @property
    def geometry(self) -> Geometry:
        total = self.reciprocal_sum
        if total > 1:
            return Geometry.SPHERICAL
        if total == 1:
            return Geometry.EUCLIDEAN
        return Geometry.HYPERBOLIC

    def as_list(self) -> List[int]:
        return [self.r, self.s, self.t]

    @classmethod
    def parse(cls, text: str) -> 'TriangleSignature':
        try:
            r, s, t = (int(part) for part in text.split(","))
        except ValueError:
            raise InvalidArgumentException("Signature \"%s\" is not of the form r,s,t" % text)
        return cls(r, s, t)

    def __eq__(self, other) -> bool:
        return isinstance(other, TriangleSignature) and self.as_list() == other.as_list()

    def __hash__(self) -> int:
        return hash((self.r, self.s, self.t))

    def __repr__(self) -> str:
        return "(%d,%d,%d)" % (self.r, self.s, self.t)


class CosetTable(object):
    def __init__(self, x_action: Sequence[int], y_action: Sequence[int]):
        self.x_action: Tuple[int, ...] = tuple(x_action)
        """
        Image of each coset under x; coset 0 is the basepoint (the subgroup itself)
        """

        self.y_action: Tuple[int, ...] = tuple(y_action)
        """
        Image of each coset under y
        """

    @property
    def degree(self) -> int:
        return len(self.x_action)

    @property
    def xy_action(self) -> Tuple[int, ...]:
        return tuple(self.y_action[c] for c in self.x_action)

    def __repr__(self) -> str:
        return "CosetTable(degree=%d, x=%s, y=%s)" % (self.degree, list(self.x_action), list(self.y_action))


class QuotientCatalog(object):
    def __init__(self,
                 signature: TriangleSignature,
                 max_index: int,
                 complete_up_to: int,
                 provenance: Dict[int, int],
                 smooth_orders: Sequence[int] = (),
                 partial: bool = False):
        self.signature = signature
        """
        The searched triangle group
        """

        self.max_index = max_index
        """
        Largest coset table degree the search was allowed to reach
        """

        self.complete_up_to = complete_up_to
        """
        Every quotient order <= this value is known to be listed
        """

        self.provenance: Dict[int, int] = dict(sorted(provenance.items()))
        """
        For each order found, the smallest degree of a coset table whose image has that order
        """

        self.smooth_orders: List[int] = sorted(smooth_orders)
        """
        Orders of images keeping the orders of x, y and xy exactly r, s and t
        """

        self.partial = partial
        """
        True when the search budget ran out before the requested window was covered
        """

    @property
    def orders(self) -> List[int]:
        return list(self.provenance.keys())

    def __contains__(self, order: int) -> bool:
        return order in self.provenance

    def document(self) -> dict:
        return {
            "signature": self.signature.as_list(),
            "max_index": self.max_index,
            "complete_up_to": self.complete_up_to,
            "orders": self.orders,
            "provenance": {str(order): degree for order, degree in self.provenance.items()},
            "smooth_orders": self.smooth_orders,
            "partial": self.partial,
        }


class ExclusionHit(object):
    def __init__(self, n: int, kx_witness: Optional[int], prop_b_witness: Optional[int]):
        self.n = n
        """
        The excluded candidate order
        """

        self.kx_witness = kx_witness
        """
        Least witness prime making n a member of K_x, if any
        """

        self.prop_b_witness = prop_b_witness
        """
        Least prime certifying the arithmetic exclusion directly, if any
        """


class CrossCheckReport(object):
    def __init__(self,
                 signature: TriangleSignature,
                 max_n: int,
                 activated: bool,
                 hits: List[ExclusionHit],
                 catalog: QuotientCatalog,
                 violations: List[int],
                 inactive_hits: List[int]):
        self.signature = signature
        self.max_n = max_n
        self.activated = activated
        """
        Whether the K_x threshold exceeds r*s*t for the parameters used
        """

        self.hits = hits
        self.catalog = catalog

        self.violations = violations
        """
        Excluded values that nevertheless occur as quotient orders
        """

        self.inactive_hits = inactive_hits
        """
        K_x members below activation whose witness divides r*s*t and which do occur as orders
        """

    @property
    def partial(self) -> bool:
        return self.catalog.partial

    def document(self) -> dict:
        return {
            "signature": self.signature.as_list(),
            "max_n": self.max_n,
            "max_index": self.catalog.max_index,
            "complete_up_to": self.catalog.complete_up_to,
            "partial": self.catalog.partial,
            "activated": self.activated,
            "excluded": [hit.n for hit in self.hits],
            "orders": self.catalog.orders,
            "violations": self.violations,
            "inactive_hits": self.inactive_hits,
        }
