"""Small prae-dilators used as fixtures and controls."""
import re

from ordinals.cnf import ONE, ZERO, Ordinal, add
from orders.coded import BOTTOM, FiniteOrder, LiftOrder

from .base import PraeDilator
from .exceptions import DilatorError


class IdentityDilator(PraeDilator):
    """T(n) = n, supp_n(i) = {i}, mu_n(m) = m."""

    name = 'identity'
    has_normal_data = True
    denotes_extensions = True
    support_bound = 1

    def build(self, n):
        return FiniteOrder(n)

    def apply(self, f, sigma):
        return f(sigma)

    def supp(self, n, sigma):
        return (sigma,)

    def mu(self, n, m):
        return m

    def normalize(self, n, sigma):
        return (sigma,), 0

    def denote_extension(self, base, element):
        return base.denote(element.support[0])


class SuccessorDilator(PraeDilator):
    """
    T(n) = n+1 where the top element n has empty support. Its induced
    function is a -> a+1, and it admits no normal data: the top element
    would have to lie below every mu_n(m).
    """

    name = 'successor'
    denotes_extensions = True
    support_bound = 1

    def build(self, n):
        return FiniteOrder(n + 1)

    def apply(self, f, sigma):
        return f.codomain if sigma == f.domain else f(sigma)

    def supp(self, n, sigma):
        return () if sigma == n else (sigma,)

    def normalize(self, n, sigma):
        return ((), 0) if sigma == n else ((sigma,), 0)

    def denote_extension(self, base, element):
        if not element.support:
            return base.order_type()
        return base.denote(element.support[0])


class TopMuSuccessorDilator(SuccessorDilator):
    """The successor dilator with mu_n(m) sent to the top element; fails the normality checks."""

    name = 'successor_top_mu'
    has_normal_data = True

    def mu(self, n, m):
        return n


class ConstantDilator(PraeDilator):
    """T(n) = c for every n; every support is empty."""

    support_bound = 0
    denotes_extensions = True

    def __init__(self, c: int):
        super().__init__()
        if c < 0:
            raise DilatorError('constant dilators need c >= 0')
        self.c = c
        self.name = f'constant_{c}'

    def build(self, n):
        return FiniteOrder(self.c)

    def apply(self, f, sigma):
        return sigma

    def supp(self, n, sigma):
        return ()

    def normalize(self, n, sigma):
        return (), sigma

    def denote_extension(self, base, element):
        return Ordinal.finite(element.sigma)


class LiftDilator(PraeDilator):
    """T(n) = 1+n with mu_n(m) = m: the normal counterpart of the successor dilator, a -> 1+a."""

    name = 'lift'
    has_normal_data = True
    denotes_extensions = True
    support_bound = 1

    def build(self, n):
        return LiftOrder(FiniteOrder(n))

    def apply(self, f, sigma):
        return sigma if sigma is BOTTOM else f(sigma)

    def supp(self, n, sigma):
        return () if sigma is BOTTOM else (sigma,)

    def mu(self, n, m):
        return m

    def normalize(self, n, sigma):
        return ((), BOTTOM) if sigma is BOTTOM else ((sigma,), 0)

    def denote_extension(self, base, element):
        if not element.support:
            return ZERO
        return add(ONE, base.denote(element.support[0]))


class HollowDilator(PraeDilator):
    """``inner`` with every support reported empty; violates the support condition."""

    def __init__(self, inner: PraeDilator):
        super().__init__()
        self.inner = inner
        self.name = f'hollow_{inner.name}'
        self.has_normal_data = inner.has_normal_data

    def build(self, n):
        return self.inner.at(n)

    def apply(self, f, sigma):
        return self.inner.apply(f, sigma)

    def supp(self, n, sigma):
        return ()

    def mu(self, n, m):
        return self.inner.mu(n, m)


_CONSTANT = re.compile(r'^constant_(\d+)$')

ZOO = {
    'identity': IdentityDilator,
    'successor': SuccessorDilator,
    'successor_top_mu': TopMuSuccessorDilator,
    'lift': LiftDilator,
}


def zoo(name: str) -> PraeDilator:
    """identity, successor, successor_top_mu, lift or constant_<c>."""
    if name in ZOO:
        return ZOO[name]()
    match = _CONSTANT.match(name)
    if match:
        return ConstantDilator(int(match.group(1)))
    raise DilatorError(f'unknown zoo dilator {name!r}; expected one of {sorted(ZOO)} or constant_<c>')
