import logging
import math
from typing import Dict, List, Optional, Sequence, Tuple

from triangle_density.models import CosetTable

Permutation = Tuple[int, ...]


def _mul(p: Permutation, q: Permutation) -> Permutation:
    """
    Apply p, then q
    """
    return tuple(q[i] for i in p)


def _inverse(p: Permutation) -> Permutation:
    result = [0] * len(p)
    for i, image in enumerate(p):
        result[image] = i
    return tuple(result)


def _is_identity(p: Permutation) -> bool:
    return all(i == image for i, image in enumerate(p))


def perm_order(p: Sequence[int]) -> int:
    """
    Order of a single permutation, the lcm of its cycle lengths
    """
    seen = [False] * len(p)
    order = 1
    for start in range(len(p)):
        if seen[start]:
            continue
        length = 0
        i = start
        while not seen[i]:
            seen[i] = True
            i = p[i]
            length += 1
        order = order * length // math.gcd(order, length)
    return order


def _first_moved(p: Permutation) -> int:
    return next(i for i, image in enumerate(p) if i != image)


class _CapExceeded(Exception):
    pass


class StabilizerChain(object):
    """
    Deterministic Schreier-Sims. Levels are completed bottom-up; a Schreier generator that does not
    sift to the identity joins the strong generators of every level it fixes, and work resumes at the
    deepest level it reached.
    """
    log = logging.getLogger("StabilizerChain")

    def __init__(self, degree: int, generators: Sequence[Sequence[int]], cap: Optional[int] = None):
        """
        Parameters
        ----------
        degree: int
            Number of points acted on
        generators: Sequence[Sequence[int]]
            Images of 0..degree-1 under each generator
        cap: int, optional
            Stop as soon as the order is known to exceed this value
        """
        self.degree = degree
        self.identity: Permutation = tuple(range(degree))
        generators = [tuple(g) for g in generators if not _is_identity(tuple(g))]

        # No generator may fix every base point
        self.base: List[int] = []
        for g in generators:
            if all(g[b] == b for b in self.base):
                self.base.append(_first_moved(g))

        self.strong: List[List[Permutation]] = [
            [g for g in generators if all(g[b] == b for b in self.base[:level])]
            for level in range(len(self.base))
        ]
        """
        strong[i] generates the pointwise stabilizer of base[0..i-1]
        """

        self.transversals: List[Dict[int, Permutation]] = [self._orbit(level) for level in range(len(self.base))]
        """
        transversals[i][b] maps base[i] to b
        """

        self.cap = cap
        self.capped = False
        try:
            self._check_cap()
            self._complete()
        except _CapExceeded:
            self.capped = True
            self.log.debug("Order exceeds %d, stopped with base %s" % (cap, self.base))

    def _orbit(self, level: int) -> Dict[int, Permutation]:
        base_point = self.base[level]
        transversal = {base_point: self.identity}
        queue = [base_point]
        for point in queue:
            for s in self.strong[level]:
                image = s[point]
                if image not in transversal:
                    transversal[image] = _mul(transversal[point], s)
                    queue.append(image)
        return transversal

    def sift(self, g: Permutation, start: int = 0) -> Tuple[Permutation, int]:
        """
        Returns
        -------
        (residue, level)
            What is left of g and the level at which sifting stopped
        """
        for i in range(start, len(self.base)):
            beta = g[self.base[i]]
            transversal = self.transversals[i]
            if beta not in transversal:
                return g, i
            g = _mul(g, _inverse(transversal[beta]))
        return g, len(self.base)

    def _failing_schreier(self, level: int) -> Optional[Tuple[Permutation, int]]:
        transversal = self.transversals[level]
        for point, u in transversal.items():
            for s in self.strong[level]:
                schreier = _mul(_mul(u, s), _inverse(transversal[s[point]]))
                if _is_identity(schreier):
                    continue
                residue, deeper = self.sift(schreier, level + 1)
                if not _is_identity(residue):
                    return residue, deeper
        return None

    def _complete(self) -> None:
        level = len(self.base) - 1
        while level >= 0:
            failing = self._failing_schreier(level)
            if failing is None:
                level -= 1
                continue
            h, deeper = failing
            if deeper == len(self.base):
                self.base.append(_first_moved(h))
                self.strong.append([])
                self.transversals.append({})
            for i in range(level + 1, deeper + 1):
                self.strong[i].append(h)
                self.transversals[i] = self._orbit(i)
            self._check_cap()
            level = deeper

    def _check_cap(self) -> None:
        if self.cap is not None and self.order() > self.cap:
            raise _CapExceeded()

    def order(self) -> int:
        result = 1
        for transversal in self.transversals:
            result *= len(transversal)
        return result


def group_order(degree: int, generators: Sequence[Sequence[int]], cap: Optional[int] = None) -> Optional[int]:
    """
    Order of the permutation group the generators span, or None once it is known to exceed cap
    """
    chain = StabilizerChain(degree, generators, cap)
    return None if chain.capped else chain.order()


def image_order(table: CosetTable, cap: Optional[int] = None) -> Optional[int]:
    """
    Order of the permutation group generated by the x- and y-actions of a coset table
    """
    return group_order(table.degree, [table.x_action, table.y_action], cap)
