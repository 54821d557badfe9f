import math
from enum import IntEnum
from typing import List, Optional, Sequence

from triangle_density.config import Config
from triangle_density.errors import InvalidArgumentException
from triangle_density.models.arith_objects import ProgressionClass
from triangle_density.models.group_objects import TriangleSignature


class ExitStatus(IntEnum):
    OK = 0
    INVARIANT_VIOLATION = 1
    INVALID_ARGUMENT = 2
    BUDGET_EXHAUSTED = 3


class RunConfig(object):
    commands = ("kx-series", "tk-report", "bertram-check", "dirichlet-logsize", "quotient-orders",
                "cross-check", "euclidean-density", "sx-series", "complement-bound")
    formats = ("csv", "json")

    def __init__(self,
                 command: str,
                 signature: Optional[TriangleSignature] = None,
                 delta: float = Config.delta,
                 epsilon: float = Config.epsilon,
                 checkpoints: Sequence[int] = Config.checkpoints,
                 x: Optional[int] = None,
                 max_n: Optional[int] = None,
                 max_order: Optional[int] = None,
                 max_index: int = Config.max_index,
                 budget: int = Config.search_budget,
                 residue: int = 1,
                 modulus: int = 4,
                 truncated: bool = False,
                 b3_constant: float = Config.b3_constant,
                 margin: float = Config.tk_margin,
                 kind: Optional[TriangleSignature] = None,
                 cache_dir: Optional[str] = None,
                 output_format: str = "csv",
                 out: Optional[str] = None,
                 plot: Optional[str] = None):
        self.command = command
        """
        One of RunConfig.commands
        """

        self.signature = signature
        """
        Triangle signature (r,s,t); required by every command that needs m = r*s*t
        """

        self.delta = delta
        self.epsilon = epsilon
        self.checkpoints: List[int] = list(checkpoints)

        self.x = x
        """
        Evaluation point of the K_x parameters used by cross-check
        """

        self.max_n = max_n
        self.max_order = max_order
        self.max_index = max_index

        self.budget = budget
        """
        Node cap of the low-index search
        """

        self.residue = residue
        self.modulus = modulus
        self.truncated = truncated
        """
        dirichlet-logsize: drop the class primes up to the threshold (log x)^(1+delta)
        """

        self.b3_constant = b3_constant
        self.margin = margin

        self.kind = kind
        """
        Euclidean signature whose smooth-order density is tabulated
        """

        self.cache_dir = cache_dir
        self.output_format = output_format
        self.out = out
        """
        Output path; standard output when None
        """

        self.plot = plot
        """
        Optional figure path for plottable series
        """

    @property
    def max_checkpoint(self) -> int:
        return max(self.checkpoints)

    def validate(self) -> None:
        """
        Raises
        ------
        InvalidArgumentException
            When any field is out of range or missing for the command
        """
        if self.command not in self.commands:
            raise InvalidArgumentException("Unknown command \"%s\"" % self.command)
        if self.output_format not in self.formats:
            raise InvalidArgumentException("Unknown output format \"%s\"" % self.output_format)
        if not 0 < self.delta < 1:
            raise InvalidArgumentException("delta must lie in (0,1), got %r" % self.delta)
        if not self.epsilon > 0:
            raise InvalidArgumentException("epsilon must be positive, got %r" % self.epsilon)
        if not self.checkpoints:
            raise InvalidArgumentException("At least one checkpoint is required")
        if any(a >= b for a, b in zip(self.checkpoints, self.checkpoints[1:])):
            raise InvalidArgumentException("Checkpoints must be strictly ascending, got %s" % self.checkpoints)
        if self.checkpoints[0] < 1:
            raise InvalidArgumentException("Checkpoints must be positive, got %s" % self.checkpoints)
        if self.max_index < 1:
            raise InvalidArgumentException("max-index must be positive, got %d" % self.max_index)
        if self.budget < 1:
            raise InvalidArgumentException("budget must be positive, got %d" % self.budget)
        if self.margin < 0:
            raise InvalidArgumentException("margin must be non-negative, got %r" % self.margin)

        needs_signature = ("kx-series", "tk-report", "quotient-orders", "cross-check", "sx-series",
                           "complement-bound")
        if self.command in needs_signature and self.signature is None:
            raise InvalidArgumentException("Command \"%s\" requires --rst" % self.command)
        if self.command in ("kx-series", "tk-report", "sx-series", "complement-bound") and self.signature.m < 2:
            raise InvalidArgumentException("r*s*t must exceed 1 for \"%s\"" % self.command)
        if self.command == "cross-check":
            if self.x is None or self.max_n is None:
                raise InvalidArgumentException("cross-check requires --x and --max-n")
            if self.max_index < self.max_n:
                raise InvalidArgumentException("max-index (%d) must be at least max-n (%d)"
                                               % (self.max_index, self.max_n))
        if self.command == "quotient-orders" and self.max_order is not None and self.max_index < self.max_order:
            raise InvalidArgumentException("max-index (%d) must be at least max-order (%d)"
                                           % (self.max_index, self.max_order))
        if self.command == "euclidean-density":
            if self.kind is None or self.kind.as_list() not in ([2, 3, 6], [2, 4, 4]):
                raise InvalidArgumentException("euclidean-density requires --kind 2,3,6 or 2,4,4")
        if self.command == "dirichlet-logsize":
            # Raises on a non-coprime pair
            ProgressionClass(self.residue, self.modulus)
        if self.command in ("tk-report", "sx-series", "complement-bound", "dirichlet-logsize") \
                and self.checkpoints[0] < Config.min_checkpoint:
            raise InvalidArgumentException("\"%s\" needs checkpoints of at least %d so that log log x exceeds 1, got %d"
                                           % (self.command, Config.min_checkpoint, self.checkpoints[0]))
        if self.command == "bertram-check":
            x = self.checkpoints[0]
            if x < 4 or math.log(x) ** (1 + self.delta) < 2:
                raise InvalidArgumentException("bertram-check needs (log x)^(1+delta) >= 2 and sqrt(x) >= 2, "
                                               "got x = %d" % x)
