"""
Prae-dilators: functors from the finite orders n = {0, ..., n-1} to coded
linear orders, together with a natural support function

    supp_n : T(n) -> finite subsets of n

such that every sigma in T(n) lies in the image of T(en) for the
enumeration en of its support. A normal prae-dilator also carries
embeddings mu_n : n -> T(n) with  sigma < mu_n(m)  iff  supp_n(sigma) is
contained in {0, ..., m-1}.
"""
import logging
from abc import ABC, abstractmethod
from typing import Any, Dict, Optional, Tuple

from orders.coded import CodedOrder, describe
from orders.embeddings import OrderEmbedding, make_embedding

from .exceptions import DilatorError

logger = logging.getLogger('dilators')

Support = Tuple[int, ...]


class PraeDilator(ABC):
    name = 'T'
    has_normal_data = False
    denotes_extensions = False
    # Largest possible support size, or None when supports are unbounded.
    support_bound: Optional[int] = None

    def __init__(self):
        self._orders: Dict[int, CodedOrder] = {}

    def at(self, n: int) -> CodedOrder:
        """The order T(n)."""
        if n not in self._orders:
            self._orders[n] = self.build(n)
        return self._orders[n]

    @abstractmethod
    def build(self, n: int) -> CodedOrder:
        ...

    @abstractmethod
    def apply(self, f: OrderEmbedding, sigma) -> Any:
        """T(f)(sigma), an element of T(f.codomain)."""

    @abstractmethod
    def supp(self, n: int, sigma) -> Support:
        ...

    def mu(self, n: int, m: int) -> Any:
        raise DilatorError(f'{self.name} carries no normal data')

    def normalize(self, n: int, sigma) -> Tuple[Support, Any]:
        """The support of sigma and the unique full-support tau with T(en)(tau) = sigma."""
        support = self.supp(n, sigma)
        tau = reconstruct(self, n, sigma, support)
        if tau is None:
            raise DilatorError(f'{describe(sigma)} in {self.name}({n}) is not in the image of its support')
        return support, tau

    def is_full_support(self, n: int, sigma) -> bool:
        return self.supp(n, sigma) == tuple(range(n))

    def denote_extension(self, base: CodedOrder, element) -> Any:
        raise NotImplementedError(f'D^{self.name} has no ordinal denotation')

    def __str__(self):
        return self.name

    def __repr__(self):
        return f'<{type(self).__name__} {self.name}>'


def reconstruct(dilator: PraeDilator, n: int, sigma, support: Support) -> Optional[Any]:
    """
    Search T(|support|) for tau with T(en)(tau) = sigma.

    Embeddings never lower the cost of an element, so only the levels up to
    the cost of sigma need to be searched; the search is exact.
    """
    embedding = make_embedding(len(support), n, support)
    source = dilator.at(len(support))
    for k in range(dilator.at(n).cost(sigma) + 1):
        for tau in source.level(k):
            if dilator.apply(embedding, tau) == sigma:
                return tau
    return None
