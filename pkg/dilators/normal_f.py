"""
The normal dilator F with

    F(X) = 1 + sum over x in 1+X of (1+X) restricted below x.

Its elements are ``BOTTOM`` and pairs <x, y> with x in X, y in 1+X and
y < x, ordered by x first and then y. F(h)(<x, y>) = <h(x), (1+h)(y)>,
supp(<x, bot>) = {x}, supp(<x, y>) = {y, x}, and mu_X(x) = <x, bot>.
The induced function is f: |F(n)| = f(n) and F(alpha) has rank function
``f_val`` below f(alpha).
"""
import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Any

from ordinals.cnf import ONE, ZERO, Ordering, add
from ordinals.functions import f_eval
from orders.coded import BOTTOM, CodedOrder, FiniteOrder, LexSquare, LiftOrder, describe

from .base import PraeDilator
from .exceptions import DilatorError
from .extension import ExtElement, ExtensionOrder

logger = logging.getLogger('dilators')


@dataclass(frozen=True)
class FPair:
    x: Any
    y: Any = BOTTOM

    def __str__(self):
        return f'<{describe(self.x)},{describe(self.y)}>'


class FOrder(CodedOrder):
    def __init__(self, base: CodedOrder):
        self.base = base
        self.lift = LiftOrder(base)
        self.name = f'F({base})'
        super().__init__()

    def compare(self, s, t) -> Ordering:
        if s is BOTTOM or t is BOTTOM:
            if s is t:
                return Ordering.EQUAL
            return Ordering.LESS if s is BOTTOM else Ordering.GREATER
        return self.base.compare(s.x, t.x) or self.lift.compare(s.y, t.y)

    def contains(self, t) -> bool:
        if t is BOTTOM:
            return True
        if not isinstance(t, FPair) or not self.base.contains(t.x) or not self.lift.contains(t.y):
            return False
        return self.lift.compare(t.y, t.x) == Ordering.LESS

    def check_member(self, t):
        if isinstance(t, FPair) and self.base.contains(t.x) and self.lift.contains(t.y):
            if self.lift.compare(t.y, t.x) != Ordering.LESS:
                raise DilatorError(f'malformed term {t}: the second component must lie below the first')
        return super().check_member(t)

    def cost(self, t) -> int:
        if t is BOTTOM:
            return 0
        return self.base.cost(t.x) + 1 + self.lift.cost(t.y)

    def _generate_levels(self):
        yield [BOTTOM]
        last = 2 * self.base.level_count() if self.base.is_finite else None
        k = 1
        while last is None or k <= last:
            level = []
            for x_cost in range(k):
                for x in self.base.level(x_cost):
                    for y in self.lift.level(k - x_cost - 1):
                        if self.lift.compare(y, x) == Ordering.LESS:
                            level.append(FPair(x, y))
            yield level
            k += 1

    @property
    def is_finite(self):
        return self.base.is_finite

    @property
    def has_denotation(self):
        return self.base.has_denotation

    def denote(self, t):
        return f_val(t, self.base)

    def order_type(self):
        base_type = self.base.order_type()
        return None if base_type is None else f_eval(base_type)


def f_val(t, base: CodedOrder):
    """Rank of t in F(alpha): val(bot) = 0, val(<x, bot>) = f(x), val(<x, y>) = f(x) + 1 + y."""
    if t is BOTTOM:
        return ZERO
    value = f_eval(base.denote(t.x))
    if t.y is BOTTOM:
        return value
    return add(add(value, ONE), base.denote(t.y))


class FDilator(PraeDilator):
    name = 'F'
    has_normal_data = True
    denotes_extensions = True
    support_bound = 2

    def build(self, n):
        return FOrder(FiniteOrder(n))

    def apply(self, f, t):
        if t is BOTTOM:
            return BOTTOM
        return FPair(f(t.x), BOTTOM if t.y is BOTTOM else f(t.y))

    def supp(self, n, t):
        if t is BOTTOM:
            return ()
        if t.y is BOTTOM:
            return (t.x,)
        return (t.y, t.x)

    def mu(self, n, m):
        return FPair(m, BOTTOM)

    def normalize(self, n, t):
        if t is BOTTOM:
            return (), BOTTOM
        if t.y is BOTTOM:
            return (t.x,), FPair(0, BOTTOM)
        return (t.y, t.x), FPair(1, 0)

    def denote_extension(self, base, element):
        return f_val(Eta(base)(element), base)


F = FDilator()


class Eta:
    """eta_X : D^F(X) -> F(X), <a, sigma> -> F(en_a)(sigma), and its inverse."""

    def __init__(self, base: CodedOrder):
        self.base = base

    @cached_property
    def source(self) -> ExtensionOrder:
        return ExtensionOrder(F, self.base)

    @cached_property
    def target(self) -> FOrder:
        return FOrder(self.base)

    def __call__(self, element: ExtElement):
        t = element.sigma
        if t is BOTTOM:
            return BOTTOM
        support = element.support
        return FPair(support[t.x], BOTTOM if t.y is BOTTOM else support[t.y])

    def inverse(self, t) -> ExtElement:
        if t is BOTTOM:
            return ExtElement((), BOTTOM)
        if t.y is BOTTOM:
            return ExtElement((t.x,), FPair(0, BOTTOM))
        return ExtElement((t.y, t.x), FPair(1, 0))


def eta(base: CodedOrder) -> Eta:
    return Eta(base)


def square_embed(t):
    """F(X) -> (1+X)^2: bot -> (bot, bot), <x, y> -> (x, y)."""
    if t is BOTTOM:
        return (BOTTOM, BOTTOM)
    return (t.x, t.y)


def square_target(base: CodedOrder) -> LexSquare:
    return LexSquare(base)
