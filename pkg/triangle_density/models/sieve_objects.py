import math
from enum import Enum
from typing import Dict, List, Optional

from triangle_density.errors import InvalidArgumentException
from triangle_density.models.group_objects import TriangleSignature
from triangle_density.models.series_objects import format_real


class SieveParams(object):
    def __init__(self, x: int, delta: float, signature: Optional[TriangleSignature] = None,
                 m: Optional[int] = None):
        """
        Parameters
        ----------
        x: int
            Upper end of the range 1..x
        delta: float
            Threshold exponent offset, strictly between 0 and 1
        signature: TriangleSignature, optional
            Supplies m = r*s*t and the activation test
        m: int, optional
            Explicit modulus when no signature is involved
        """
        if x < 1:
            raise InvalidArgumentException("x must be positive, got %d" % x)
        if not 0 < delta < 1:
            raise InvalidArgumentException("delta must lie in (0,1), got %r" % delta)
        if signature is None and m is None:
            raise InvalidArgumentException("Either a signature or a modulus m is required")

        self.x = x
        self.delta = delta
        self.signature = signature
        self.m = m if m is not None else signature.m
        if self.m < 2:
            raise InvalidArgumentException("m must exceed 1, got %d" % self.m)

    @property
    def threshold(self) -> float:
        """
        (log x)^(1+delta) with the natural logarithm
        """
        return math.log(self.x) ** (1 + self.delta)

    @property
    def activated(self) -> bool:
        """
        True when the threshold exceeds r*s*t
        """
        return self.threshold > self.m

    def at(self, x: int) -> 'SieveParams':
        return SieveParams(x, self.delta, self.signature, self.m)


class ExceptionKind(Enum):
    B1 = 1
    B2 = 2
    B3 = 3


class ExceptionReport(object):
    fields = ("x", "kind", "count", "bound", "holds", "f", "g", "h", "c", "minimal_c")

    def __init__(self, x: int, kind: ExceptionKind, count: int, bound: float,
                 params: Dict[str, float], minimal_c: Optional[float] = None):
        self.x = x
        self.kind = kind
        self.count = count
        """
        Exact number of exceptional n <= x
        """

        self.bound = bound
        """
        The stated upper bound on count
        """

        self.params = params
        """
        The f, g, h choices and constant c that produced the bound
        """

        self.minimal_c = minimal_c
        """
        For B3, the infimum of constants c for which count < bound
        """

    @property
    def holds(self) -> bool:
        return self.count < self.bound

    def to_row(self) -> Dict[str, str]:
        def opt(key):
            return format_real(self.params[key]) if key in self.params else ""

        return {
            "x": str(self.x),
            "kind": self.kind.name,
            "count": str(self.count),
            "bound": format_real(self.bound),
            "holds": "1" if self.holds else "0",
            "f": opt("f"),
            "g": opt("g"),
            "h": opt("h"),
            "c": opt("c"),
            "minimal_c": format_real(self.minimal_c) if self.minimal_c is not None else "",
        }


class KxCheckpoint(object):
    fields = ("x", "kx_count", "kx_ratio", "comp_S", "comp_G", "comp_H", "b1_bound", "b2_bound", "activated")

    def __init__(self, x: int, threshold: float, kx_count: int, comp_s: int, comp_g: int, comp_h: int,
                 activated: bool, identity_holds: bool):
        self.x = x
        self.threshold = threshold
        self.kx_count = kx_count
        self.comp_s = comp_s
        """
        |{1..x} minus S_x|
        """

        self.comp_g = comp_g
        """
        |{1..x} minus G_x|
        """

        self.comp_h = comp_h
        """
        |{1..x} minus H_x|
        """

        self.activated = activated
        self.identity_holds = identity_holds
        """
        Whether {1..x} minus K_x is covered by the three complements, checked element by element
        """

    @property
    def kx_ratio(self) -> float:
        return self.kx_count / self.x

    @property
    def b1_bound(self) -> float:
        return self.x / self.threshold

    @property
    def b2_bound(self) -> float:
        return self.x * (math.log(self.x) + 1) / self.threshold

    @property
    def complement(self) -> int:
        return self.x - self.kx_count

    def to_row(self) -> Dict[str, str]:
        return {
            "x": str(self.x),
            "kx_count": str(self.kx_count),
            "kx_ratio": format_real(self.kx_ratio),
            "comp_S": str(self.comp_s),
            "comp_G": str(self.comp_g),
            "comp_H": str(self.comp_h),
            "b1_bound": format_real(self.b1_bound),
            "b2_bound": format_real(self.b2_bound),
            "activated": "1" if self.activated else "0",
        }


class ComplementBoundReport(object):
    fields = ("x", "complement", "b1_bound", "b2_bound", "n_bad", "n_measured", "tk_activated", "holds")

    def __init__(self, checkpoint: KxCheckpoint, n_bad: int, tk_activated: bool):
        self.checkpoint = checkpoint
        self.n_bad = n_bad
        self.tk_activated = tk_activated
        """
        Whether A(x) - B(x)^(1+epsilon) > 1, the regime in which n_bad bounds the S_x complement
        """

    @property
    def n_measured(self) -> float:
        """
        N(x) with the Turan-Kubilius term replaced by the measured bad count
        """
        return self.checkpoint.b1_bound + self.checkpoint.b2_bound + self.n_bad

    @property
    def holds(self) -> bool:
        return self.checkpoint.complement <= self.n_measured

    def to_row(self) -> Dict[str, str]:
        return {
            "x": str(self.checkpoint.x),
            "complement": str(self.checkpoint.complement),
            "b1_bound": format_real(self.checkpoint.b1_bound),
            "b2_bound": format_real(self.checkpoint.b2_bound),
            "n_bad": str(self.n_bad),
            "n_measured": format_real(self.n_measured),
            "tk_activated": "1" if self.tk_activated else "0",
            "holds": "1" if self.holds else "0",
        }


def rows_of(reports: List) -> List[Dict[str, str]]:
    return [report.to_row() for report in reports]
