"""
The extension D^T(X) of a prae-dilator T to an arbitrary coded order X.

Elements are pairs <a, sigma> of a finite subset a of X and an element
sigma of T(|a|) with full support. Two elements are compared by pushing
both sigmas into T(|a0 u a1|) along the inclusions and comparing there.
"""
import logging
from dataclasses import dataclass
from typing import Any, Callable, List, Optional, Tuple

from ordinals.cnf import Ordinal, Ordering
from orders.checks import CheckReport
from orders.coded import CodedOrder, descending_tuples, describe, total_weight
from orders.embeddings import FinSubset, inclusion
from orders.exceptions import EmbeddingError, OrderMembershipError

from .base import PraeDilator
from .exceptions import SupportError

logger = logging.getLogger('dilators')


@dataclass(frozen=True)
class ExtElement:
    support: Tuple[Any, ...]
    sigma: Any

    def __str__(self):
        return f'<{{{",".join(describe(x) for x in self.support)}}}, {describe(self.sigma)}>'


class ExtensionOrder(CodedOrder):
    """D^T(X). The cost of <a, sigma> is the weight of a plus the cost of sigma in T(|a|)."""

    def __init__(self, dilator: PraeDilator, base: CodedOrder):
        self.dilator = dilator
        self.base = base
        self.name = f'D^{dilator.name}({base})'
        super().__init__()

    def merged_support(self, a: Tuple, b: Tuple) -> FinSubset:
        return FinSubset.of(self.base, set(a) | set(b))

    def compare(self, x: ExtElement, y: ExtElement) -> Ordering:
        if x == y:
            return Ordering.EQUAL
        union = self.merged_support(x.support, y.support)
        pushed_x = self.dilator.apply(inclusion(FinSubset(x.support), union), x.sigma)
        pushed_y = self.dilator.apply(inclusion(FinSubset(y.support), union), y.sigma)
        return self.dilator.at(len(union)).compare(pushed_x, pushed_y)

    def contains(self, x) -> bool:
        if not isinstance(x, ExtElement) or not isinstance(x.support, tuple):
            return False
        if not all(self.base.contains(a) for a in x.support):
            return False
        if any(self.base.compare(a, b) != Ordering.LESS for a, b in zip(x.support, x.support[1:])):
            return False
        n = len(x.support)
        return self.dilator.at(n).contains(x.sigma) and self.dilator.is_full_support(n, x.sigma)

    def check_member(self, x):
        if isinstance(x, ExtElement) and self.dilator.at(len(x.support)).contains(x.sigma):
            if not self.dilator.is_full_support(len(x.support), x.sigma):
                raise SupportError(f'{x} does not have full support')
        return super().check_member(x)

    def subset_weight(self, support: Tuple) -> int:
        return sum(self.base.cost(a) + 1 for a in support)

    def cost(self, x: ExtElement) -> int:
        return self.subset_weight(x.support) + self.dilator.at(len(x.support)).cost(x.sigma)

    def _last_cost(self):
        if not self.is_finite:
            return None
        if self.dilator.support_bound == 0:
            return self.dilator.at(0).max_level_cost()
        largest = self.base.size
        return total_weight(self.base) + max(self.dilator.at(m).max_level_cost() for m in range(largest + 1))

    def _generate_levels(self):
        last = self._last_cost()
        k = 0
        while last is None or k <= last:
            level = []
            for weight in range(k + 1):
                for descending in descending_tuples(self.base, weight, max_length=self.dilator.support_bound):
                    support = tuple(reversed(descending))
                    n = len(support)
                    for sigma in self.dilator.at(n).level(k - weight):
                        if self.dilator.is_full_support(n, sigma):
                            level.append(ExtElement(support, sigma))
            yield level
            k += 1

    @property
    def is_finite(self) -> bool:
        if self.dilator.support_bound == 0:
            return self.dilator.at(0).is_finite
        if not self.base.is_finite:
            return False
        return all(self.dilator.at(m).is_finite for m in range(self.base.size + 1))

    @property
    def has_denotation(self):
        return self.base.has_denotation and self.dilator.denotes_extensions

    def denote(self, x: ExtElement):
        return self.dilator.denote_extension(self.base, x)


def ext_map(dilator: PraeDilator, h: Callable, target: CodedOrder = None) -> Callable:
    """D^T(h): <a, sigma> -> <h[a], sigma> for an order embedding h : X -> Y."""

    def mapped(element: ExtElement) -> ExtElement:
        image = tuple(h(a) for a in element.support)
        if target is not None:
            if any(target.compare(a, b) != Ordering.LESS for a, b in zip(image, image[1:])):
                raise EmbeddingError(f'h is not strictly increasing on {element}')
        return ExtElement(image, element.sigma)

    return mapped


def ext_supp(element: ExtElement) -> Tuple[Any, ...]:
    return element.support


def ext_mu(dilator: PraeDilator, base: CodedOrder, x) -> ExtElement:
    """D^mu_X(x) = <{x}, mu_1(0)>."""
    if not base.contains(x):
        raise OrderMembershipError(f'{describe(x)} is not an element of {base.name}')
    return ExtElement((x,), dilator.mu(1, 0))


def wrap(dilator: PraeDilator, support: Tuple, n: int, sigma) -> ExtElement:
    """
    The element of D^T(X) named by sigma in T(n) over an increasing
    n-tuple ``support`` of X: normalize sigma and keep only the positions
    its support uses.
    """
    positions, tau = dilator.normalize(n, sigma)
    return ExtElement(tuple(support[i] for i in positions), tau)


def fT_prefix_denotation(order: CodedOrder, count: int, below: Optional[Ordinal] = None) -> Tuple[List[Ordinal], CheckReport]:
    """
    Denote the first ``count`` enumerated elements of ``order`` in increasing
    order and check the values rise strictly, staying below ``below`` when given.

    For D^T(ordinal(alpha)) with ``below = f_T(alpha)`` this is the finite
    shadow of the induced function.
    """
    if not order.has_denotation:
        raise OrderMembershipError(f'{order.name} has no denotation')
    report = CheckReport(f'prefix denotation of {order.name}', parameters={'count': str(count)})
    ranked = order.sorted(order.enumerate(count))
    values = [order.denote(x) for x in ranked]
    for x, y, lower, upper in zip(ranked, ranked[1:], values, values[1:]):
        report.tick()
        if not lower < upper:
            report.fail('denotation', 'denotations do not increase', lower=x, upper=y, value=lower)
    if below is not None:
        for x, value in zip(ranked, values):
            report.tick()
            if not value < below:
                report.fail('bound', f'denotation reaches {below}', element=x, value=value)
    return values, report.log(logger)
