from fractions import Fraction
from typing import Dict, List, Sequence

from triangle_density.config import Config


class DensitySeries(object):
    fields = ("x", "count", "ratio")

    def __init__(self, checkpoints: Sequence[int], counts: Sequence[int]):
        self.checkpoints: List[int] = list(checkpoints)
        """
        Ascending values of x
        """

        self.counts: List[int] = list(counts)
        """
        |S ∩ {1..x}| at each checkpoint
        """

        self.ratios: List[Fraction] = [Fraction(c, x) for x, c in zip(self.checkpoints, self.counts)]
        """
        d_x(S) = count / x at each checkpoint, kept exact
        """

    def ratio_at(self, x: int) -> Fraction:
        return self.ratios[self.checkpoints.index(x)]

    def rows(self) -> List[Dict[str, str]]:
        return [
            {"x": str(x), "count": str(c), "ratio": "%.*g" % (Config.ratio_digits, float(r))}
            for x, c, r in zip(self.checkpoints, self.counts, self.ratios)
        ]


def format_real(value: float) -> str:
    """
    Shortest decimal text that reads back to the same binary64 value
    """
    return repr(float(value))
