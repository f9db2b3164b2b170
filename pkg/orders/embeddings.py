"""
The category of finite orders: n = {0, ..., n-1} with strictly increasing
maps, plus finite subsets of an ambient order with their enumerations.
"""
from dataclasses import dataclass
from functools import cmp_to_key
from itertools import combinations
from typing import Any, Callable, Iterable, Iterator, Tuple

from .exceptions import EmbeddingError


@dataclass(frozen=True)
class OrderEmbedding:
    domain: int
    codomain: int
    values: Tuple[int, ...]

    def __post_init__(self):
        if len(self.values) != self.domain:
            raise EmbeddingError(f'embedding {self.domain}->{self.codomain} needs {self.domain} values, got {len(self.values)}')
        for previous, value in zip(self.values, self.values[1:]):
            if value <= previous:
                raise EmbeddingError(f'values {self.values} are not strictly increasing')
        if self.values and (self.values[0] < 0 or self.values[-1] >= self.codomain):
            raise EmbeddingError(f'values {self.values} fall outside {{0,...,{self.codomain - 1}}}')

    def __call__(self, i: int) -> int:
        return self.values[i]

    def __str__(self):
        return f'{self.values}: {self.domain}->{self.codomain}'


def make_embedding(domain: int, codomain: int, values: Iterable[int]) -> OrderEmbedding:
    return OrderEmbedding(domain, codomain, tuple(values))


def identity(n: int) -> OrderEmbedding:
    return OrderEmbedding(n, n, tuple(range(n)))


def compose(first: OrderEmbedding, then: OrderEmbedding) -> OrderEmbedding:
    """``then`` after ``first``."""
    if first.codomain != then.domain:
        raise EmbeddingError(f'cannot compose {first} with {then}')
    return OrderEmbedding(first.domain, then.codomain, tuple(then.values[i] for i in first.values))


def enumerate_all(m: int, n: int) -> Iterator[OrderEmbedding]:
    """Every embedding m -> n, C(n, m) of them, in lexicographic order of values."""
    for values in combinations(range(n), m):
        yield OrderEmbedding(m, n, values)


def embeddings_up_to(size_bound: int) -> Iterator[OrderEmbedding]:
    for n in range(size_bound + 1):
        for m in range(n + 1):
            yield from enumerate_all(m, n)


@dataclass(frozen=True)
class FinSubset:
    """A finite subset of an ambient order, stored in increasing order."""

    elements: Tuple[Any, ...] = ()

    @classmethod
    def of(cls, order, elements: Iterable) -> 'FinSubset':
        ordered = sorted(elements, key=cmp_to_key(order.compare))
        for previous, element in zip(ordered, ordered[1:]):
            if order.compare(previous, element) >= 0:
                raise EmbeddingError(f'duplicate element {element!r} in finite subset')
        return cls(tuple(ordered))

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, element):
        return element in self.elements

    def en(self, i: int):
        return self.elements[i]

    def index(self, element) -> int:
        try:
            return self.elements.index(element)
        except ValueError:
            raise EmbeddingError(f'{element!r} is not in the subset') from None

    def union(self, other: 'FinSubset', order) -> 'FinSubset':
        return FinSubset.of(order, set(self.elements) | set(other.elements))

    def image(self, h: Callable) -> 'FinSubset':
        return FinSubset(tuple(h(x) for x in self.elements))


def en(subset: FinSubset) -> Callable[[int], Any]:
    """The increasing enumeration |a| -> a."""
    return subset.en


def restrict(f: Callable, source: FinSubset, target: FinSubset) -> OrderEmbedding:
    """The unique embedding |source| -> |target| with en(target) . restrict(f) = f . en(source)."""
    return OrderEmbedding(len(source), len(target), tuple(target.index(f(x)) for x in source))


def inclusion(source: FinSubset, target: FinSubset) -> OrderEmbedding:
    return restrict(lambda x: x, source, target)


def positions(subset: Tuple, superset: Tuple) -> OrderEmbedding:
    """Inclusion of one increasing tuple into another, as an embedding."""
    return inclusion(FinSubset(tuple(subset)), FinSubset(tuple(superset)))
