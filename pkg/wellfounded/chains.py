"""
Finite strictly descending chains and their transport along order maps.

A descending chain in X pushed through a strictly increasing map X -> Y is
a descending chain in Y, so an embedding into a well-founded order rules
out infinite descent in its source.
"""
import logging
from dataclasses import dataclass
from typing import Any, Callable, Iterator, List, Tuple

from ordinals.cnf import Ordering
from orders.coded import CodedOrder, LexSquare, describe

from .exceptions import ChainError, ChainTransferError

logger = logging.getLogger('wellfounded')


@dataclass(frozen=True)
class DescendingChain:
    order: CodedOrder
    elements: Tuple[Any, ...]

    def __post_init__(self):
        object.__setattr__(self, 'elements', tuple(self.elements))
        for x in self.elements:
            if not self.order.contains(x):
                raise ChainError(f'{describe(x)} is not an element of {self.order.name}')
        for i, (upper, lower) in enumerate(zip(self.elements, self.elements[1:])):
            if self.order.compare(lower, upper) != Ordering.LESS:
                raise ChainError(
                    f'chain does not descend at position {i + 1}: '
                    f'{describe(lower)} is not below {describe(upper)} in {self.order.name}'
                )

    def __len__(self):
        return len(self.elements)

    def __iter__(self) -> Iterator[Any]:
        return iter(self.elements)

    def __getitem__(self, index):
        return self.elements[index]

    def rendered(self) -> List[str]:
        return [describe(x) for x in self.elements]

    def __str__(self):
        return ' > '.join(self.rendered())


def stabilize_index(chain: DescendingChain) -> int:
    """
    For a chain <x_n, y_n> in (1+X)^2, the least N such that x_n = x_N for
    every n >= N. From N on the second components descend in 1+X.
    """
    order = chain.order
    if not isinstance(order, LexSquare):
        raise ChainError(f'stabilize_index needs a chain in a lexicographic square, got {order.name}')
    elements = chain.elements
    if not elements:
        return 0
    lift = order.lift
    last = elements[-1][0]
    index = len(elements) - 1
    while index > 0 and lift.compare(elements[index - 1][0], last) == Ordering.EQUAL:
        index -= 1
    tail = [y for _, y in elements[index:]]
    for upper, lower in zip(tail, tail[1:]):
        if lift.compare(lower, upper) != Ordering.LESS:
            raise ChainError(f'second components do not descend after position {index}')
    return index


def chain_transfer(h: Callable, chain: DescendingChain, target: CodedOrder) -> DescendingChain:
    """Push ``chain`` through ``h``; every adjacent pair of images must still descend in ``target``."""
    images = [h(x) for x in chain]
    for i, (x, image) in enumerate(zip(chain, images)):
        if not target.contains(image):
            raise ChainTransferError(
                f'{describe(x)} is sent to {describe(image)}, which is not in {target.name}',
                index=i, upper=x,
            )
    for i in range(1, len(images)):
        if target.compare(images[i], images[i - 1]) != Ordering.LESS:
            raise ChainTransferError(
                f'the map is not strictly increasing: {describe(chain[i])} < {describe(chain[i - 1])} '
                f'but {describe(images[i])} is not below {describe(images[i - 1])}',
                index=i, upper=chain[i - 1], lower=chain[i],
            )
    logger.debug(f'transferred a chain of length {len(chain)} from {chain.order.name} to {target.name}')
    return DescendingChain(target, tuple(images))
