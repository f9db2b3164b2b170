"""
Coded countable linear orders.

A ``CodedOrder`` has a decidable comparison, a membership predicate and a
cost for every element. Elements are grouped into levels by cost; every
level is finite, so enumerating level by level (each level sorted by the
order's own comparison) reaches every element at a finite index and is
deterministic. The level generator terminates exactly when the order is
finite.
"""
import logging
import re
from abc import ABC, abstractmethod
from functools import cmp_to_key, lru_cache
from typing import Any, Iterator, List, Optional, Tuple

from ordinals.cnf import ONE, ZERO, Ordering, Ordinal, add, cmp, mul, successor, two_pow
from ordinals.expressions import parse_ordinal

from .exceptions import OrderMembershipError, OrderSpecError

logger = logging.getLogger('orders')


class Bottom:
    """The fresh minimum element of 1+X."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return 'bot'

    def __reduce__(self):
        return (Bottom, ())


BOTTOM = Bottom()


def int_order(a: int, b: int) -> Ordering:
    if a == b:
        return Ordering.EQUAL
    return Ordering.LESS if a < b else Ordering.GREATER


def is_int(value) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


def describe(element) -> str:
    """Plain-text rendering of an element of any coded order."""
    if isinstance(element, tuple):
        return '<' + ','.join(describe(x) for x in element) + '>'
    return str(element)


class CodedOrder(ABC):
    name = 'order'

    def __init__(self):
        self._levels: List[List[Any]] = []
        self._source: Optional[Iterator[List[Any]]] = None
        self._exhausted = False
        self.sort_key = cmp_to_key(self.compare)

    # --- interface -------------------------------------------------------

    @abstractmethod
    def compare(self, x, y) -> Ordering:
        ...

    @abstractmethod
    def contains(self, x) -> bool:
        ...

    @abstractmethod
    def cost(self, x) -> int:
        ...

    @abstractmethod
    def _generate_levels(self) -> Iterator[List[Any]]:
        """Yield the elements of cost 0, 1, 2, ... as lists; stop iff the order is finite."""

    @property
    @abstractmethod
    def is_finite(self) -> bool:
        ...

    def denote(self, x) -> Ordinal:
        raise NotImplementedError(f'{self.name} has no ordinal denotation')

    @property
    def has_denotation(self) -> bool:
        return False

    def order_type(self) -> Optional[Ordinal]:
        return None

    # --- enumeration -----------------------------------------------------

    def _advance(self) -> bool:
        if self._exhausted:
            return False
        if self._source is None:
            self._source = self._generate_levels()
        try:
            level = next(self._source)
        except StopIteration:
            self._exhausted = True
            return False
        self._levels.append(sorted(level, key=self.sort_key))
        return True

    def level(self, k: int) -> List[Any]:
        """Elements of cost ``k`` in increasing order; empty past the last level of a finite order."""
        while len(self._levels) <= k:
            if not self._advance():
                return []
        return self._levels[k]

    def level_count(self) -> int:
        if not self.is_finite:
            raise OrderMembershipError(f'{self.name} is infinite')
        while self._advance():
            pass
        return len(self._levels)

    def iter_levels(self) -> Iterator[List[Any]]:
        k = 0
        while len(self._levels) > k or self._advance():
            yield self._levels[k]
            k += 1

    def iter_elements(self) -> Iterator[Any]:
        for level in self.iter_levels():
            yield from level

    def enumerate(self, k: int) -> List[Any]:
        """The first ``k`` elements of the enumeration (fewer if the order is smaller)."""
        found = []
        if k <= 0:
            return found
        for element in self.iter_elements():
            found.append(element)
            if len(found) >= k:
                break
        return found

    def elements(self) -> List[Any]:
        if not self.is_finite:
            raise OrderMembershipError(f'{self.name} is infinite; use enumerate(k)')
        return list(self.iter_elements())

    @property
    def size(self) -> int:
        return len(self.elements())

    def max_level_cost(self) -> int:
        return self.level_count() - 1

    # --- helpers ---------------------------------------------------------

    def lt(self, x, y) -> bool:
        return self.compare(x, y) == Ordering.LESS

    def sorted(self, elements) -> List[Any]:
        return sorted(elements, key=self.sort_key)

    def check_member(self, x):
        if not self.contains(x):
            raise OrderMembershipError(f'{describe(x)} is not an element of {self.name}')
        return x

    def __str__(self):
        return self.name

    def __repr__(self):
        return f'<{type(self).__name__} {self.name}>'


def descending_tuples(order: CodedOrder, total: int, upper=None, max_length: Optional[int] = None) -> Iterator[Tuple]:
    """Strictly descending tuples over ``order`` below ``upper`` whose elements weigh cost+1 and sum to ``total``."""
    if total == 0:
        yield ()
        return
    if max_length == 0:
        return
    remaining = None if max_length is None else max_length - 1
    for element_cost in range(total):
        for x in order.level(element_cost):
            if upper is not None and order.compare(x, upper) != Ordering.LESS:
                continue
            for rest in descending_tuples(order, total - element_cost - 1, x, remaining):
                yield (x,) + rest


def total_weight(order: CodedOrder) -> int:
    """Weight of the whole of a finite order: the largest cost any descending tuple can have."""
    return sum(order.cost(x) + 1 for x in order.elements())


class FiniteOrder(CodedOrder):
    """n = {0, ..., n-1}."""

    def __init__(self, n: int):
        if not is_int(n) or n < 0:
            raise OrderSpecError(f'fin(n) needs a natural number, got {n!r}')
        self.n = n
        self.name = f'fin({n})'
        super().__init__()

    def compare(self, x, y):
        return int_order(x, y)

    def contains(self, x):
        return is_int(x) and 0 <= x < self.n

    def cost(self, x):
        return x

    def _generate_levels(self):
        for k in range(self.n):
            yield [k]

    @property
    def is_finite(self):
        return True

    @property
    def has_denotation(self):
        return True

    def denote(self, x):
        return Ordinal.finite(x)

    def order_type(self):
        return Ordinal.finite(self.n)

    def enumerate(self, k):
        return list(range(min(k, self.n)))


@lru_cache(maxsize=None)
def ordinals_of_size(size: int, below: Optional[Ordinal]) -> Tuple[Ordinal, ...]:
    """Canonical ordinals of the given ``Ordinal.size`` whose exponents are all below ``below``."""
    return tuple(Ordinal._trusted(terms) for terms in _term_sequences(size, below, below))


@lru_cache(maxsize=None)
def _term_sequences(size: int, upper: Optional[Ordinal], below: Optional[Ordinal]) -> Tuple[Tuple, ...]:
    if size == 0:
        return ((),)
    found = []
    for exponent_size in range(size):
        for exponent in ordinals_of_size(exponent_size, below):
            if upper is not None and not exponent < upper:
                continue
            for coefficient in range(1, size - exponent_size + 1):
                for rest in _term_sequences(size - exponent_size - coefficient, exponent, below):
                    found.append(((exponent, coefficient),) + rest)
    return tuple(found)


class OrdinalOrder(CodedOrder):
    """The ordinals below ``alpha``, levelled by symbol size."""

    def __init__(self, alpha: Ordinal):
        self.alpha = alpha
        self.name = f'ordinal({alpha})'
        self._exponent_bound = ONE if alpha.is_finite else successor(alpha.leading_exponent)
        super().__init__()

    def compare(self, x, y):
        return cmp(x, y)

    def contains(self, x):
        return isinstance(x, Ordinal) and x < self.alpha

    def cost(self, x):
        return x.size()

    def _generate_levels(self):
        if self.alpha.is_finite:
            for k in range(self.alpha.finite_part):
                yield [Ordinal.finite(k)]
            return
        size = 0
        while True:
            yield [a for a in ordinals_of_size(size, self._exponent_bound) if a < self.alpha]
            size += 1

    @property
    def is_finite(self):
        return self.alpha.is_finite

    @property
    def has_denotation(self):
        return True

    def denote(self, x):
        return x

    def order_type(self):
        return self.alpha


class LiftOrder(CodedOrder):
    """1+X: the order X with a fresh minimum ``BOTTOM``."""

    def __init__(self, base: CodedOrder):
        self.base = base
        self.name = f'lift({base})'
        super().__init__()

    def compare(self, x, y):
        if x is BOTTOM or y is BOTTOM:
            if x is y:
                return Ordering.EQUAL
            return Ordering.LESS if x is BOTTOM else Ordering.GREATER
        return self.base.compare(x, y)

    def contains(self, x):
        return x is BOTTOM or self.base.contains(x)

    def cost(self, x):
        return 0 if x is BOTTOM else self.base.cost(x) + 1

    def _generate_levels(self):
        yield [BOTTOM]
        yield from self.base.iter_levels()

    @property
    def is_finite(self):
        return self.base.is_finite

    @property
    def has_denotation(self):
        return self.base.has_denotation

    def denote(self, x):
        return ZERO if x is BOTTOM else add(ONE, self.base.denote(x))

    def order_type(self):
        base_type = self.base.order_type()
        return None if base_type is None else add(ONE, base_type)


class LexSquare(CodedOrder):
    """(1+X)^2 ordered lexicographically, first component most significant."""

    def __init__(self, base: CodedOrder):
        self.base = base
        self.lift = LiftOrder(base)
        self.name = f'lex_square({base})'
        super().__init__()

    def compare(self, x, y):
        return self.lift.compare(x[0], y[0]) or self.lift.compare(x[1], y[1])

    def contains(self, x):
        return isinstance(x, tuple) and len(x) == 2 and self.lift.contains(x[0]) and self.lift.contains(x[1])

    def cost(self, x):
        return self.lift.cost(x[0]) + self.lift.cost(x[1])

    def _generate_levels(self):
        last = 2 * self.lift.max_level_cost() if self.lift.is_finite else None
        k = 0
        while last is None or k <= last:
            yield [(u, v) for i in range(k + 1) for u in self.lift.level(i) for v in self.lift.level(k - i)]
            k += 1

    @property
    def is_finite(self):
        return self.base.is_finite

    @property
    def has_denotation(self):
        return self.lift.has_denotation and self.lift.order_type() is not None

    def denote(self, x):
        return add(mul(self.lift.order_type(), self.lift.denote(x[0])), self.lift.denote(x[1]))

    def order_type(self):
        lift_type = self.lift.order_type()
        return None if lift_type is None else mul(lift_type, lift_type)


class PowerOrder(CodedOrder):
    """
    2^X: strictly descending finite sequences <x1, ..., xn> over X, stored
    most significant first and compared lexicographically (a proper prefix
    is smaller).
    """

    def __init__(self, base: CodedOrder):
        self.base = base
        self.name = f'pow2({base})'
        super().__init__()

    def compare(self, x, y):
        for a, b in zip(x, y):
            order = self.base.compare(a, b)
            if order:
                return order
        return int_order(len(x), len(y))

    def contains(self, x):
        if not isinstance(x, tuple) or not all(self.base.contains(a) for a in x):
            return False
        return all(self.base.compare(a, b) == Ordering.GREATER for a, b in zip(x, x[1:]))

    def cost(self, x):
        return sum(self.base.cost(a) + 1 for a in x)

    def _generate_levels(self):
        last = total_weight(self.base) if self.base.is_finite else None
        k = 0
        while last is None or k <= last:
            yield list(descending_tuples(self.base, k))
            k += 1

    @property
    def is_finite(self):
        return self.base.is_finite

    @property
    def has_denotation(self):
        return self.base.has_denotation

    def denote(self, x):
        total = ZERO
        for a in x:
            total = add(total, two_pow(self.base.denote(a)))
        return total

    def order_type(self):
        base_type = self.base.order_type()
        return None if base_type is None else two_pow(base_type)


class IntegerOrder(CodedOrder):
    """... < -2 < -1 < 0: the ill-founded control instance."""

    name = 'integers'

    def compare(self, x, y):
        return int_order(x, y)

    def contains(self, x):
        return is_int(x) and x <= 0

    def cost(self, x):
        return -x

    def _generate_levels(self):
        k = 0
        while True:
            yield [-k]
            k += 1

    @property
    def is_finite(self):
        return False


ORDER_BUILDERS = {
    'fin': lambda arg: FiniteOrder(_natural(arg)),
    'ordinal': lambda arg: OrdinalOrder(parse_ordinal(arg)),
    'lift': lambda arg: LiftOrder(build_order(arg)),
    'lex_square': lambda arg: LexSquare(build_order(arg)),
    'pow2': lambda arg: PowerOrder(build_order(arg)),
    'integers': lambda arg: IntegerOrder(),
}

_SPEC_PATTERN = re.compile(r'^\s*([A-Za-z_]\w*)\s*(?:\((.*)\))?\s*$', re.S)


def _natural(text: str) -> int:
    try:
        value = int(text.strip())
    except ValueError:
        raise OrderSpecError(f'expected a natural number, got {text.strip()!r}') from None
    if value < 0:
        raise OrderSpecError(f'expected a natural number, got {value}')
    return value


def build_order(spec: str) -> CodedOrder:
    """Build a coded order from text such as ``fin(3)``, ``ordinal(w^2)`` or ``pow2(lift(fin(2)))``."""
    match = _SPEC_PATTERN.match(spec)
    if not match:
        raise OrderSpecError(f'cannot read order description {spec!r}')
    name, argument = match.group(1), match.group(2)
    if name not in ORDER_BUILDERS:
        raise OrderSpecError(f'unknown order {name!r}; expected one of {sorted(ORDER_BUILDERS)}')
    if argument is None and name != 'integers':
        raise OrderSpecError(f'{name} needs an argument, as in {name}(...)')
    order = ORDER_BUILDERS[name](argument or '')
    logger.debug(f'built order {order.name} from {spec!r}')
    return order
