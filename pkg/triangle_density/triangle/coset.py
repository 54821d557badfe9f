import logging
from abc import ABC, abstractmethod
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

from triangle_density.config import Config
from triangle_density.errors import BudgetExhaustedException, InvalidArgumentException, \
    InvariantViolationException
from triangle_density.models import CosetTable, TriangleSignature

# Columns of the coset table: x, x^-1, y, y^-1
X, X_INV, Y, Y_INV = 0, 1, 2, 3
INV = (X_INV, X, Y_INV, Y)
UNDEFINED = -1

log = logging.getLogger(__name__)


class SearchBudget(object):
    def __init__(self, limit: int = Config.search_budget):
        """
        Parameters
        ----------
        limit: int
            Number of branch attempts allowed, shared by every search this budget is passed to
        """
        if limit < 1:
            raise InvalidArgumentException("Search budget must be positive, got %d" % limit)
        self.limit = limit
        self.spent = 0

    @property
    def exhausted(self) -> bool:
        return self.spent >= self.limit

    def spend(self) -> None:
        if self.exhausted:
            raise BudgetExhaustedException("Search budget of %d nodes exhausted" % self.limit)
        self.spent += 1


class SearchEventListener(ABC):
    @abstractmethod
    def on_table_found(self, signature: TriangleSignature, table: CosetTable) -> None:
        pass

    @abstractmethod
    def on_search_finished(self, signature: TriangleSignature, max_index: int, nodes: int) -> None:
        """
        Parameters
        ----------
        signature: TriangleSignature
        max_index: int
            Largest degree the finished search allowed
        nodes: int
            Branch attempts spent by that search
        """
        pass


class _Presentation(object):
    """
    x^r = y^s = (xy)^t = 1, with every cyclic conjugate of each relator and its inverse
    filed under its first letter
    """

    def __init__(self, signature: TriangleSignature):
        self.signature = signature
        self.relators = [(X,) * signature.r, (Y,) * signature.s, (X, Y) * signature.t]
        conjugates = set()
        for relator in self.relators:
            inverse = tuple(INV[g] for g in reversed(relator))
            for word in (relator, inverse):
                for i in range(len(word)):
                    conjugates.add(word[i:] + word[:i])
        self.conjugates: List[List[Tuple[int, ...]]] = [sorted(w for w in conjugates if w[0] == g) for g in range(4)]

        # Words whose cycles are checked in regular mode, with the order each must divide
        self.cycle_words = [((X,), signature.r), ((Y,), signature.s), ((X, Y), signature.t)]


class _PartialTable(object):
    def __init__(self, presentation: _Presentation, capacity: int):
        self.presentation = presentation
        self.capacity = capacity
        self.entries = [UNDEFINED] * (4 * capacity)
        """
        entries[4c + g] is the image of coset c under column g
        """

        self.count = 1
        self.trail: List[int] = []

    def assign(self, c: int, g: int, d: int) -> None:
        self.entries[4 * c + g] = d
        self.entries[4 * d + INV[g]] = c
        self.trail.append(4 * c + g)
        self.trail.append(4 * d + INV[g])

    def undo(self, mark: int, count: int) -> None:
        entries = self.entries
        trail = self.trail
        while len(trail) > mark:
            entries[trail.pop()] = UNDEFINED
        self.count = count

    def first_undefined(self, start: int) -> Optional[int]:
        entries = self.entries
        for position in range(start, 4 * self.count):
            if entries[position] == UNDEFINED:
                return position
        return None

    def define(self, c: int, g: int, d: int) -> bool:
        """
        Set c.g = d and close under relator deductions; False on a coincidence
        """
        self.assign(c, g, d)
        queue = [(c, g)]
        conjugates = self.presentation.conjugates
        while queue:
            c, g = queue.pop()
            d = self.entries[4 * c + g]
            for word in conjugates[g]:
                if not self._scan(c, word, queue):
                    return False
            for word in conjugates[INV[g]]:
                if not self._scan(d, word, queue):
                    return False
        return True

    def _scan(self, c: int, word: Sequence[int], queue: List[Tuple[int, int]]) -> bool:
        entries = self.entries
        length = len(word)

        forward = c
        i = 0
        while i < length:
            image = entries[4 * forward + word[i]]
            if image == UNDEFINED:
                break
            forward = image
            i += 1
        if i == length:
            return forward == c

        backward = c
        j = length - 1
        while j >= i:
            image = entries[4 * backward + INV[word[j]]]
            if image == UNDEFINED:
                break
            backward = image
            j -= 1
        if j < i:
            return backward == forward
        if j == i:
            # A single gap closes the relator: deduce it
            self.assign(forward, word[i], backward)
            queue.append((forward, word[i]))
        return True

    def _step(self, c: int, word: Sequence[int]) -> int:
        entries = self.entries
        for g in word:
            c = entries[4 * c + g]
            if c == UNDEFINED:
                break
        return c

    def cycles_uniform(self, exact_degree: Optional[int]) -> bool:
        """
        In a regular action each of x, y and xy has all cycles of one length L dividing its order,
        so no partial chain may already reach L steps
        """
        for word, order in self.presentation.cycle_words:
            closed = None
            longest_open = 0
            for c in range(self.count):
                current = c
                steps = 0
                while True:
                    current = self._step(current, word)
                    if current == UNDEFINED:
                        longest_open = max(longest_open, steps)
                        break
                    steps += 1
                    if current == c:
                        if closed is None:
                            closed = steps
                        elif closed != steps:
                            return False
                        break
                    if steps >= order:
                        return False
            if closed is not None:
                if order % closed != 0 or longest_open >= closed:
                    return False
                if exact_degree is not None and exact_degree % closed != 0:
                    return False
        return True

    def automorphism_consistent(self, k: int) -> bool:
        """
        Whether the defined part admits c -> image(c) with image(0) = k and image(c.g) = image(c).g
        """
        entries = self.entries
        image = [UNDEFINED] * self.count
        preimage = [UNDEFINED] * self.count
        image[0] = k
        preimage[k] = 0
        queue = [0]
        for c in queue:
            mapped = image[c]
            for g in range(4):
                d = entries[4 * c + g]
                e = entries[4 * mapped + g]
                if d == UNDEFINED or e == UNDEFINED:
                    continue
                if image[d] == UNDEFINED:
                    if preimage[e] != UNDEFINED:
                        return False
                    image[d] = e
                    preimage[e] = d
                    queue.append(d)
                elif image[d] != e:
                    return False
        return True

    def compare_from(self, k: int) -> int:
        """
        Compare the complete table renumbered from basepoint k with the table itself, row by row

        Returns -1, 0 or 1 as the renumbered table is smaller, equal or larger.
        """
        entries = self.entries
        label = [UNDEFINED] * self.count
        label[k] = 0
        order = [k]
        for i in range(self.count):
            old = order[i]
            for g in range(4):
                target = entries[4 * old + g]
                new = label[target]
                if new == UNDEFINED:
                    new = len(order)
                    label[target] = new
                    order.append(target)
                reference = entries[4 * i + g]
                if new != reference:
                    return -1 if new < reference else 1
        return 0

    def first_in_class(self) -> bool:
        return all(self.compare_from(k) >= 0 for k in range(1, self.count))

    def regular(self) -> bool:
        return all(self.compare_from(k) == 0 for k in range(1, self.count))

    def snapshot(self) -> CosetTable:
        entries = self.entries
        return CosetTable([entries[4 * c + X] for c in range(self.count)],
                          [entries[4 * c + Y] for c in range(self.count)])


class _Frame(object):
    def __init__(self, position: int, mark: int, count: int):
        self.position = position
        """
        Flat index 4c + g of the entry being branched on
        """

        self.option = 0
        """
        Next candidate coset for the entry
        """

        self.mark = mark
        self.count = count


def check_table(table: CosetTable, signature: TriangleSignature) -> None:
    """
    Raises
    ------
    InvariantViolationException
        When a relator does not trace to the identity on every coset, or the action is not transitive
    """
    degree = table.degree
    for name, action, order in (("x", table.x_action, signature.r),
                                ("y", table.y_action, signature.s),
                                ("xy", table.xy_action, signature.t)):
        if sorted(action) != list(range(degree)):
            raise InvariantViolationException("The %s-action of %r is not a permutation" % (name, table))
        for c in range(degree):
            image = c
            for _ in range(order):
                image = action[image]
            if image != c:
                raise InvariantViolationException("%s^%d moves coset %d in %r" % (name, order, c, table))

    reached = {0}
    frontier = [0]
    while frontier:
        c = frontier.pop()
        for d in (table.x_action[c], table.y_action[c]):
            if d not in reached:
                reached.add(d)
                frontier.append(d)
    if len(reached) != degree:
        raise InvariantViolationException("%r is not transitive" % table)


def low_index_tables(signature: TriangleSignature,
                     max_index: int,
                     budget: Optional[SearchBudget] = None,
                     normal_only: bool = False,
                     exact_index: bool = False,
                     listeners: Iterable[SearchEventListener] = ()) -> Iterator[CosetTable]:
    """
    Coset tables of the ordinary triangle group on the cosets of its subgroups of index <= max_index,
    one per conjugacy class, in depth-first order of the standard numbering

    Parameters
    ----------
    signature: TriangleSignature
    max_index: int
        Largest number of cosets
    budget: SearchBudget, optional
        Node cap; a fresh Config.search_budget cap when omitted
    normal_only: bool
        Only emit regular tables, i.e. normal subgroups, pruning partial tables that cannot become regular
    exact_index: bool
        Only emit tables with exactly max_index cosets
    listeners: Iterable[SearchEventListener]

    Raises
    ------
    BudgetExhaustedException
        When the cap is hit; its partial attribute lists the tables emitted so far
    """
    if max_index < 1:
        raise InvalidArgumentException("max_index must be positive, got %d" % max_index)
    budget = budget if budget is not None else SearchBudget()
    listeners = list(listeners)

    state = _PartialTable(_Presentation(signature), max_index)
    exact_degree = max_index if exact_index else None
    probes = Config.normal_probe_cosets
    emitted: List[CosetTable] = []
    start_spent = budget.spent

    def viable() -> bool:
        if not normal_only:
            return True
        if not state.cycles_uniform(exact_degree):
            return False
        return all(state.automorphism_consistent(k) for k in range(1, min(state.count, probes + 1)))

    def accepted() -> bool:
        if exact_index and state.count != max_index:
            return False
        return state.regular() if normal_only else state.first_in_class()

    stack = [_Frame(0, len(state.trail), state.count)]
    while stack:
        frame = stack[-1]
        state.undo(frame.mark, frame.count)
        c, g = divmod(frame.position, 4)

        d = frame.option
        while d < state.count and state.entries[4 * d + INV[g]] != UNDEFINED:
            d += 1
        if d > state.count or (d == state.count and state.count >= max_index):
            stack.pop()
            continue
        frame.option = d + 1

        try:
            budget.spend()
        except BudgetExhaustedException:
            raise BudgetExhaustedException("Low-index search for %r up to index %d ran out after %d nodes"
                                           % (signature, max_index, budget.spent - start_spent), partial=emitted)
        if d == state.count:
            state.count += 1
        if not state.define(c, g, d) or not viable():
            continue

        position = state.first_undefined(frame.position)
        if position is not None:
            stack.append(_Frame(position, len(state.trail), state.count))
            continue
        if not accepted():
            continue

        table = state.snapshot()
        check_table(table, signature)
        emitted.append(table)
        log.debug("Found %r" % table)
        for listener in listeners:
            listener.on_table_found(signature, table)
        yield table

    for listener in listeners:
        listener.on_search_finished(signature, max_index, budget.spent - start_spent)
