"""
Bounded search for descending chains.

The search only ever falsifies well-foundedness: it either returns a chain
of the requested length or gives up after ``budget * factor`` comparisons
(or when a finite order runs out of elements).
"""
import logging
import random
from itertools import islice
from typing import List, Optional

from ordinal_lab.conf import bound
from ordinals.cnf import Ordering
from orders.coded import CodedOrder, describe

from .chains import DescendingChain
from .exceptions import SearchError

logger = logging.getLogger('wellfounded')

GREEDY = 'greedy-min-above'
RANDOM = 'random'
STRATEGIES = (GREEDY, RANDOM)


class ComparisonBudgetExceeded(Exception):
    pass


class DescendingSearch:
    """
    Walk the enumeration of ``order`` in blocks of ``window`` new elements.

    The chain starts at the largest of the first ``window`` elements. From
    every later block only the elements below the current end of the chain
    are candidates; ``greedy-min-above`` appends the least candidate, which
    descends as far as the block allows, and ``random`` appends a seeded
    random candidate. A block without candidates is skipped.
    """

    def __init__(
        self,
        order: CodedOrder,
        budget: int,
        strategy: str = GREEDY,
        seed: Optional[int] = None,
        window: Optional[int] = None,
        factor: Optional[int] = None,
    ):
        if strategy not in STRATEGIES:
            raise SearchError(f'unknown strategy {strategy!r}; expected one of {STRATEGIES}')
        self.order = order
        self.budget = budget
        self.strategy = strategy
        self.seed = bound('DEFAULT_SEED') if seed is None else seed
        self.window = max(1, bound('CHAIN_WINDOW') if window is None else window)
        factor = bound('CHAIN_COMPARISON_FACTOR') if factor is None else factor
        self.limit = budget * factor
        self.comparisons = 0
        self.reason = ''

    def _compare(self, x, y) -> Ordering:
        self.comparisons += 1
        if self.comparisons > self.limit:
            raise ComparisonBudgetExceeded
        return self.order.compare(x, y)

    def _least(self, elements: List):
        least = elements[0]
        for x in elements[1:]:
            if self._compare(x, least) == Ordering.LESS:
                least = x
        return least

    def _greatest(self, elements: List):
        greatest = elements[0]
        for x in elements[1:]:
            if self._compare(x, greatest) == Ordering.GREATER:
                greatest = x
        return greatest

    def run(self) -> Optional[DescendingChain]:
        if self.budget <= 0:
            return DescendingChain(self.order, ())
        rng = random.Random(self.seed)
        stream = self.order.iter_elements()
        chain: List = []
        try:
            first = list(islice(stream, self.window))
            if not first:
                self.reason = 'empty order'
                return None
            chain.append(self._greatest(first))
            while len(chain) < self.budget:
                block = list(islice(stream, self.window))
                if not block:
                    self.reason = 'order exhausted'
                    return None
                below = [x for x in block if self._compare(x, chain[-1]) == Ordering.LESS]
                if not below:
                    continue
                chain.append(self._least(below) if self.strategy == GREEDY else rng.choice(below))
        except ComparisonBudgetExceeded:
            self.reason = f'comparison budget of {self.limit} spent'
            logger.debug(
                f'search in {self.order.name} stopped at chain length {len(chain)}; '
                f'last element {describe(chain[-1]) if chain else "none"}'
            )
            return None
        self.reason = 'found'
        logger.info(f'found a descending chain of length {len(chain)} in {self.order.name} after {self.comparisons} comparisons')
        return DescendingChain(self.order, tuple(chain))


def descending_search(
    order: CodedOrder,
    budget: int,
    strategy: str = GREEDY,
    seed: Optional[int] = None,
    **options,
) -> Optional[DescendingChain]:
    """A descending chain of length ``budget`` in ``order``, or None when the bounded search finds none."""
    return DescendingSearch(order, budget, strategy, seed, **options).run()
