"""
Upper derivatives of F and the order embedding of 2^X they induce.

An upper derivative of F is a normal prae-dilator S with a natural family

    xi_n : (F.S)(n) -> S(n)    with    xi . mu^{F.S} = mu^S.

For S = E the family reads an element of D^F(E(n)) as an element of
F(E(n)) and sends bot to 0, <t, bot> to f(t) and <t, s> to f(t) + 1 + s,
with f computed on terms by ``symbolic_f``.

Given any upper derivative G the map

    xi^F_X = D^xi_X . zeta^{F,G}_X . eta^{-1}_{D^G(X)} : F(D^G(X)) -> D^G(X)

defines J : 2^X -> D^G(X) by J(<>) = xi^F_X(bot) and
J(<x0, x1, ...>) = xi^F_X(<D^mu_X(x0), J(<x1, ...>)>).
"""
import logging
from dataclasses import dataclass, field
from functools import partial
from itertools import combinations
from typing import Any, Callable, Dict, Iterable, Iterator, List, Optional, Tuple

from ordinals.cnf import Ordering
from orders.checks import CheckReport, order_iso_check
from orders.coded import BOTTOM, CodedOrder, PowerOrder, describe
from orders.embeddings import embeddings_up_to
from orders.exceptions import SequenceError

from .base import PraeDilator
from .composition import Composite, ExtendedFamily, Zeta
from .exceptions import DilatorError
from .exponential import E, NATURAL_ATOMS, ONE_TERM, ZERO_TERM, ETerm, symbolic_f
from .extension import ExtElement, ExtensionOrder, ext_mu
from .normal_f import F, Eta, FOrder, FPair
from .validators import resolve_bounds

logger = logging.getLogger('dilators')


@dataclass
class UpperDerivative:
    S: PraeDilator
    xi: Callable[[int, Any], Any]
    T: PraeDilator = F
    composite: Composite = field(init=False, repr=False)

    def __post_init__(self):
        if not self.S.has_normal_data:
            raise DilatorError(f'{self.S.name} carries no normal data and cannot be an upper derivative')
        self.composite = Composite(self.T, self.S)

    @property
    def name(self) -> str:
        return f'({self.S.name}, xi)'


def xi_E(n: int, rho: ExtElement) -> ETerm:
    pair = Eta(E.at(n))(rho)
    if pair is BOTTOM:
        return ZERO_TERM
    value = symbolic_f(pair.x)
    if pair.y is BOTTOM:
        return value
    return NATURAL_ATOMS.add(NATURAL_ATOMS.add(value, ONE_TERM), pair.y)


def xi_build() -> UpperDerivative:
    """The upper derivative (E, xi) of F."""
    return UpperDerivative(E, xi_E)


def validate_upper_derivative(
    G: UpperDerivative,
    size_bound: Optional[int] = None,
    element_bound: Optional[int] = None,
) -> CheckReport:
    """Order preservation and naturality of every xi_n, and the law xi . mu^{T.S} = mu^S."""
    size_bound, element_bound = resolve_bounds(size_bound, element_bound)
    report = CheckReport(
        f'upper derivative {G.name} of {G.T.name}',
        parameters={'N': str(size_bound), 'K': str(element_bound)},
    )
    composite, S = G.composite, G.S
    prefixes = {n: composite.at(n).enumerate(element_bound) for n in range(size_bound + 1)}

    for n in range(size_bound + 1):
        report.merge(order_iso_check(
            composite.at(n), S.at(n), partial(G.xi, n), element_bound, name=f'xi_{n}',
        ))

    for f in embeddings_up_to(size_bound):
        m, n = f.domain, f.codomain
        for rho in prefixes[m]:
            report.tick()
            pushed = G.xi(n, composite.apply(f, rho))
            pulled = S.apply(f, G.xi(m, rho))
            if pushed != pulled:
                report.fail(
                    'naturality', 'xi_n . (T.S)(f) differs from S(f) . xi_m',
                    f=f, element=rho, left=pushed, right=pulled,
                )

    for n in range(1, size_bound + 1):
        for m in range(n):
            report.tick()
            found, expected = G.xi(n, composite.mu(n, m)), S.mu(n, m)
            if found != expected:
                report.fail('mu-law', 'xi(mu^{T.S}_n(m)) differs from mu^S_n(m)', n=n, m=m, found=found, expected=expected)

    report.log(logger)
    return report


class XiF:
    """xi^F_X : F(D^G(X)) -> D^G(X)."""

    def __init__(self, base: CodedOrder, G: UpperDerivative):
        if G.T is not F:
            raise DilatorError(f'xi^F needs an upper derivative of F, got one of {G.T.name}')
        self.base = base
        self.G = G
        self.target = ExtensionOrder(G.S, base)
        self.source = FOrder(self.target)
        self.eta = Eta(self.target)
        self.zeta = Zeta(F, G.S, base, composite=G.composite)
        self.extended = ExtendedFamily(G.S, G.xi, base)

    def __call__(self, t) -> ExtElement:
        return self.extended(self.zeta(self.eta.inverse(t)))


def xi_F(base: CodedOrder, G: UpperDerivative) -> XiF:
    return XiF(base, G)


class JEmbedding:
    """
    J : 2^X -> D^G(X), memoized per sequence.

    The recursion only applies xi^F to <D^mu(x0), J(rest)> when J(rest) lies
    below D^mu(x0); otherwise it falls back to xi^F(bot) and counts the
    fallback in ``defaults_used``. On strictly descending input the fallback
    never fires.
    """

    def __init__(self, base: CodedOrder, G: UpperDerivative):
        self.base = base
        self.G = G
        self.xi_F = XiF(base, G)
        self.source = PowerOrder(base)
        self.target = self.xi_F.target
        self.defaults_used = 0
        self._memo: Dict[Tuple, ExtElement] = {}

    def mark(self, x) -> ExtElement:
        return ext_mu(self.G.S, self.base, x)

    def __call__(self, sequence: Iterable) -> ExtElement:
        sequence = tuple(sequence)
        if not self.source.contains(sequence):
            raise SequenceError(
                f'{describe(sequence)} is not a strictly descending sequence over {self.base.name}'
            )
        return self._embed(sequence)

    def _embed(self, sequence: Tuple) -> ExtElement:
        if sequence in self._memo:
            return self._memo[sequence]
        if not sequence:
            value = self.xi_F(BOTTOM)
        else:
            head, rest = self.mark(sequence[0]), self._embed(sequence[1:])
            if self.target.lt(rest, head):
                value = self.xi_F(FPair(head, rest))
            else:
                self.defaults_used += 1
                logger.warning(
                    f'J{describe(sequence)}: J of the tail is not below mu({describe(sequence[0])}); '
                    f'using the default xi^F(bot)'
                )
                value = self.xi_F(BOTTOM)
        self._memo[sequence] = value
        return value


def J_embed(base: CodedOrder, G: UpperDerivative) -> JEmbedding:
    return JEmbedding(base, G)


def descending_sequences(order: CodedOrder, elements: Iterable, max_length: int) -> Iterator[Tuple]:
    """Every strictly descending sequence of at most ``max_length`` of the given elements."""
    ranked = order.sorted(set(elements))
    for length in range(max_length + 1):
        for chosen in combinations(ranked, length):
            yield tuple(reversed(chosen))


def validate_embedding(j: JEmbedding, sequences: List[Tuple], points: List[Any]) -> CheckReport:
    """
    J is strictly increasing on the given sequences, and
    J(<x1, ...>) < D^mu(x) whenever the sequence is empty or x1 < x.
    """
    report = CheckReport(
        f'J into {j.target.name}',
        parameters={'sequences': str(len(sequences)), 'points': str(len(points))},
    )
    ranked = j.source.sorted(sequences)
    images = [j(sequence) for sequence in ranked]
    for i, (lower, image_lower) in enumerate(zip(ranked, images)):
        for upper, image_upper in zip(ranked[i + 1:], images[i + 1:]):
            report.tick()
            if j.target.compare(image_lower, image_upper) != Ordering.LESS:
                report.fail('order', 'J is not strictly increasing', lower=lower, upper=upper)
    for sequence, image in zip(ranked, images):
        for x in points:
            if sequence and not j.base.lt(sequence[0], x):
                continue
            report.tick()
            if not j.target.lt(image, j.mark(x)):
                report.fail('invariant', 'J(sequence) is not below D^mu(x)', sequence=sequence, x=x)
    if j.defaults_used:
        report.fail('default', f'the default clause fired {j.defaults_used} times')
    report.log(logger)
    return report
