"""
Composition (T.S)(n) = D^T(S(n)), the isomorphisms

    zeta_X : D^T(D^S(X)) -> D^{T.S}(X)

and the extension D^xi of a natural family xi_n : (T.S)(n) -> S(n).
"""
import logging
from typing import Any, Callable, Optional

from orders.coded import CodedOrder
from orders.embeddings import FinSubset, OrderEmbedding, inclusion, make_embedding

from .base import PraeDilator
from .extension import ExtElement, ExtensionOrder, wrap

logger = logging.getLogger('dilators')


class Composite(PraeDilator):
    def __init__(self, outer: PraeDilator, inner: PraeDilator):
        super().__init__()
        self.outer = outer
        self.inner = inner
        self.name = f'{outer.name}.{inner.name}'
        self.has_normal_data = outer.has_normal_data and inner.has_normal_data
        if outer.support_bound is not None and inner.support_bound is not None:
            self.support_bound = outer.support_bound * inner.support_bound

    def build(self, n: int) -> CodedOrder:
        return ExtensionOrder(self.outer, self.inner.at(n))

    def apply(self, f: OrderEmbedding, sigma: ExtElement) -> ExtElement:
        return ExtElement(tuple(self.inner.apply(f, s) for s in sigma.support), sigma.sigma)

    def supp(self, n: int, sigma: ExtElement):
        used = set()
        for s in sigma.support:
            used.update(self.inner.supp(n, s))
        return tuple(sorted(used))

    def mu(self, n: int, m: int) -> ExtElement:
        """mu^{T.S}_n = D^{mu^T}_{S(n)} . mu^S_n."""
        return ExtElement((self.inner.mu(n, m),), self.outer.mu(1, 0))

    def normalize(self, n: int, sigma: ExtElement):
        support = self.supp(n, sigma)
        pulled = []
        for s in sigma.support:
            positions, tau = self.inner.normalize(n, s)
            into = make_embedding(len(positions), len(support), tuple(support.index(p) for p in positions))
            pulled.append(self.inner.apply(into, tau))
        return support, ExtElement(tuple(pulled), sigma.sigma)


class Zeta:
    """zeta^{T,S}_X and its inverse."""

    def __init__(self, outer: PraeDilator, inner: PraeDilator, base: CodedOrder, composite: Optional[Composite] = None):
        self.outer = outer
        self.inner = inner
        self.base = base
        self.composite = composite or Composite(outer, inner)
        self.inner_extension = ExtensionOrder(inner, base)
        self.source = ExtensionOrder(outer, self.inner_extension)
        self.target = ExtensionOrder(self.composite, base)

    def __call__(self, element: ExtElement) -> ExtElement:
        union = FinSubset.of(self.base, {x for e in element.support for x in e.support})
        named = tuple(
            self.inner.apply(inclusion(FinSubset(e.support), union), e.sigma) for e in element.support
        )
        return ExtElement(union.elements, ExtElement(named, element.sigma))

    def inverse(self, element: ExtElement) -> ExtElement:
        inner_elements = tuple(
            wrap(self.inner, element.support, len(element.support), s) for s in element.sigma.support
        )
        return ExtElement(inner_elements, element.sigma.sigma)


def zeta(outer: PraeDilator, inner: PraeDilator, base: CodedOrder) -> Zeta:
    return Zeta(outer, inner, base)


class ExtendedFamily:
    """
    D^xi_X : D^{T.S}(X) -> D^S(X) for a natural family xi_n : (T.S)(n) -> S(n),
    given as ``xi(n, rho)``.
    """

    def __init__(self, inner: PraeDilator, xi: Callable[[int, Any], Any], base: CodedOrder):
        self.inner = inner
        self.xi = xi
        self.base = base

    def __call__(self, element: ExtElement) -> ExtElement:
        n = len(element.support)
        return wrap(self.inner, element.support, n, self.xi(n, element.sigma))


def dext_xi(outer: PraeDilator, inner: PraeDilator, xi: Callable[[int, Any], Any], base: CodedOrder) -> ExtendedFamily:
    logger.debug(f'extending xi: {outer.name}.{inner.name} => {inner.name} over {base.name}')
    return ExtendedFamily(inner, xi, base)
