from typing import Dict, List

import numpy as np

from triangle_density.config import Config
from triangle_density.models.series_objects import format_real


class LogSizeReport(object):
    fields = ("x", "ell", "predicted", "ratio")

    def __init__(self, x: int, ell: float, predicted: float):
        self.x = x
        self.ell = ell
        """
        Logarithmic size of the primes counted, compensated sum
        """

        self.predicted = predicted
        """
        The asymptotic main term without its o(1)
        """

    @property
    def ratio(self) -> float:
        return self.ell / self.predicted if self.predicted > 0 else float("nan")

    def to_row(self) -> Dict[str, str]:
        return {
            "x": str(self.x),
            "ell": format_real(self.ell),
            "predicted": format_real(self.predicted),
            "ratio": format_real(self.ratio),
        }


class InfntsizePrimes(object):
    def __init__(self, m: int, x: int, primes: np.ndarray, progression_primes: np.ndarray,
                 statement_progression_primes: np.ndarray):
        self.m = m
        self.x = x

        self.primes = primes
        """
        Odd primes p <= x with gcd((p-1)/2, m) = 1
        """

        self.progression_primes = progression_primes
        """
        Primes of 2m - 1 + 2mn with n >= Config.progression_start
        """

        self.statement_progression_primes = statement_progression_primes
        """
        Primes of the same progression indexed from n >= 1
        """


class TKReport(object):
    fields = ("x", "m", "delta", "epsilon", "Px_size", "A", "B2", "G", "lhs", "ratio", "n_bad", "activated",
              "Px_logsize", "exceeds_logsize", "scaled_bad_count")

    def __init__(self, x: int, m: int, delta: float, epsilon: float, px_size: int,
                 a: float, b2: float, g: float, lhs: float, n_bad: int, px_logsize: float,
                 value_counts: List[int]):
        self.x = x
        self.m = m
        self.delta = delta
        self.epsilon = epsilon

        self.px_size = px_size
        """
        Number of primes in P_x
        """

        self.a = a
        """
        A(x) = sum over prime powers p^v <= x, p in P_x, of (1/p^v)(1 - 1/p)
        """

        self.b2 = b2
        """
        B(x)^2 = sum over the same prime powers of 1/p^v
        """

        self.g = g
        """
        G(x) = sum over the same prime powers of 1/p^(v+1)
        """

        self.lhs = lhs
        """
        (1/x) * sum over n <= x of |f(n) - A(x)|^2
        """

        self.n_bad = n_bad
        """
        Number of n <= x with |f(n) - A(x)| >= B(x)^(1+epsilon)
        """

        self.px_logsize = px_logsize
        """
        Logarithmic size of P_x
        """

        self.value_counts = value_counts
        """
        value_counts[k] = number of n <= x with f(n) = k
        """

    @property
    def empty(self) -> bool:
        return self.px_size == 0

    @property
    def ratio(self) -> float:
        return self.lhs / self.b2 if self.b2 > 0 else 0.0

    @property
    def b(self) -> float:
        return self.b2 ** 0.5

    @property
    def cut(self) -> float:
        """
        B(x)^(1+epsilon)
        """
        return self.b ** (1 + self.epsilon)

    @property
    def activated(self) -> bool:
        """
        A(x) - B(x)^(1+epsilon) > 1
        """
        return not self.empty and self.a - self.cut > 1

    @property
    def sandwich_holds(self) -> bool:
        """
        0 < G < 1 and B^2 - 1 < A < B^2; vacuous for an empty P_x
        """
        return self.empty or (0 < self.g < 1 and self.b2 - 1 < self.a < self.b2)

    @property
    def exceeds_logsize(self) -> bool:
        """
        B(x)^2 >= l(P_x), strictly once some p^2 <= x with p in P_x
        """
        return self.empty or self.b2 >= self.px_logsize

    @property
    def scaled_bad_count(self) -> float:
        """
        n_bad * B(x)^(2 epsilon) / x, the measured stand-in for 2 + g(x)
        """
        return self.n_bad * self.b2 ** self.epsilon / self.x

    @property
    def complement_s(self) -> int:
        return self.value_counts[0] if self.value_counts else self.x

    def to_row(self) -> Dict[str, str]:
        return {
            "x": str(self.x),
            "m": str(self.m),
            "delta": format_real(self.delta),
            "epsilon": format_real(self.epsilon),
            "Px_size": str(self.px_size),
            "A": format_real(self.a),
            "B2": format_real(self.b2),
            "G": format_real(self.g),
            "lhs": format_real(self.lhs),
            "ratio": format_real(self.ratio),
            "n_bad": str(self.n_bad),
            "activated": "1" if self.activated else "0",
            "Px_logsize": format_real(self.px_logsize),
            "exceeds_logsize": "1" if self.exceeds_logsize else "0",
            "scaled_bad_count": format_real(self.scaled_bad_count),
        }


class SxCheckpoint(object):
    fields = ("x", "count", "ratio", "complement", "n_bad", "tk_activated", "bound_holds")

    def __init__(self, x: int, count: int, n_bad: int, tk_activated: bool):
        self.x = x
        self.count = count
        """
        |S_x|
        """

        self.n_bad = n_bad
        self.tk_activated = tk_activated

    @property
    def complement(self) -> int:
        return self.x - self.count

    @property
    def bound_holds(self) -> bool:
        """
        |{1..x} minus S_x| <= n_bad; only asserted once the activation holds
        """
        return self.complement <= self.n_bad

    def to_row(self) -> Dict[str, str]:
        return {
            "x": str(self.x),
            "count": str(self.count),
            "ratio": "%.*g" % (Config.ratio_digits, self.count / self.x),
            "complement": str(self.complement),
            "n_bad": str(self.n_bad),
            "tk_activated": "1" if self.tk_activated else "0",
            "bound_holds": "1" if self.bound_holds else "0",
        }
