"""
The exponential normal dilator E with E(alpha) of order type omega^(omega^alpha).

An element of E(X) is a two-level Cantor normal form

    omega^(b1)*c1 + ... + omega^(bk)*ck,    b1 > ... > bk,

whose exponents are inner forms  omega^[x1]*d1 + ... + omega^[xj]*dj  over
atoms x1 > ... > xj of X. Both levels compare lexicographically. The
support of a term is its set of atoms, E(h) renames atoms, and
mu_X(x) = omega^(omega^[x]).
"""
import logging
from dataclasses import dataclass
from functools import partial
from typing import Any, Callable, Dict, Iterator, List, Tuple

from ordinals.cnf import Ordering, Ordinal, omega_pow
from orders.coded import CodedOrder, FiniteOrder, describe, int_order, is_int

from .base import PraeDilator
from .exceptions import DilatorError

logger = logging.getLogger('dilators')

Inner = Tuple[Tuple[Any, int], ...]
Outer = Tuple[Tuple[Inner, int], ...]


def cnf_compare(a: Tuple, b: Tuple, key_compare: Callable) -> Ordering:
    for (key_a, coefficient_a), (key_b, coefficient_b) in zip(a, b):
        order = key_compare(key_a, key_b)
        if order:
            return order
        if coefficient_a != coefficient_b:
            return int_order(coefficient_a, coefficient_b)
    return int_order(len(a), len(b))


def cnf_add(a: Tuple, b: Tuple, key_compare: Callable) -> Tuple:
    if not b:
        return a
    lead, lead_coefficient = b[0]
    kept = []
    for key, coefficient in a:
        order = key_compare(key, lead)
        if order == Ordering.GREATER:
            kept.append((key, coefficient))
        elif order == Ordering.EQUAL:
            kept.append((key, coefficient + lead_coefficient))
            return tuple(kept) + b[1:]
        else:
            break
    return tuple(kept) + b


def cnf_decrement_last(a: Tuple) -> Tuple:
    if not a:
        raise DilatorError('0 has no last term')
    key, coefficient = a[-1]
    if coefficient == 1:
        return a[:-1]
    return a[:-1] + ((key, coefficient - 1),)


def inner_compare(a: Inner, b: Inner, atom_compare: Callable = int_order) -> Ordering:
    return cnf_compare(a, b, atom_compare)


@dataclass(frozen=True)
class ETerm:
    terms: Outer = ()

    @classmethod
    def finite(cls, n: int) -> 'ETerm':
        return cls((((), n),)) if n else cls(())

    @classmethod
    def tower(cls, atom) -> 'ETerm':
        """omega^(omega^[atom])."""
        return cls(((((atom, 1),), 1),))

    def atoms(self) -> List[Any]:
        return [atom for inner, _ in self.terms for atom, _ in inner]

    def rename(self, h: Callable) -> 'ETerm':
        return ETerm(tuple(
            (tuple((h(atom), d) for atom, d in inner), c) for inner, c in self.terms
        ))

    def __str__(self):
        if not self.terms:
            return '0'
        parts = []
        for inner, coefficient in self.terms:
            if not inner:
                parts.append(str(coefficient))
                continue
            exponent = ' + '.join(
                f'w^[{describe(atom)}]' + (f'*{d}' if d > 1 else '') for atom, d in inner
            )
            parts.append(f'w^({exponent})' + (f'*{coefficient}' if coefficient > 1 else ''))
        return ' + '.join(parts)


ZERO_TERM = ETerm(())
ONE_TERM = ETerm.finite(1)


class ETermAlgebra:
    """Two-level CNF arithmetic for ETerms over one order of atoms."""

    def __init__(self, atom_compare: Callable = int_order):
        self.atom_compare = atom_compare
        self.inner_compare = partial(inner_compare, atom_compare=atom_compare)

    def compare(self, s: ETerm, t: ETerm) -> Ordering:
        return cnf_compare(s.terms, t.terms, self.inner_compare)

    def add(self, s: ETerm, t: ETerm) -> ETerm:
        return ETerm(cnf_add(s.terms, t.terms, self.inner_compare))

    def inner_add(self, a: Inner, b: Inner) -> Inner:
        return cnf_add(a, b, self.atom_compare)

    def symbolic_f(self, t: ETerm) -> ETerm:
        """
        f on two-level forms, uniform in the atoms. For the infinite part
        L = omega^b1*c1 + sum omega^bi*ci and the finite part n of t:

            f(t) = 1 + omega^(dec(b1)+b1) + omega^(b1+b1)*(c1-1) + sum omega^(b1+bi)*ci
                     + L*n + (n-1)          (the last line only when n > 0)

        where dec removes one copy of the last inner term.
        """
        terms = t.terms
        n = terms[-1][1] if terms and not terms[-1][0] else 0
        limit = terms[:-1] if n else terms
        if not limit:
            return ETerm.finite(1 + n * (n + 1) // 2)
        (first, first_coefficient), *rest = limit
        total = ETerm(((self.inner_add(cnf_decrement_last(first), first), 1),))
        if first_coefficient > 1:
            total = self.add(total, ETerm(((self.inner_add(first, first), first_coefficient - 1),)))
        for exponent, coefficient in rest:
            total = self.add(total, ETerm(((self.inner_add(first, exponent), coefficient),)))
        if n:
            scaled = ETerm(((first, first_coefficient * n),) + tuple(rest))
            total = self.add(total, self.add(scaled, ETerm.finite(n - 1)))
        return self.add(ONE_TERM, total)


NATURAL_ATOMS = ETermAlgebra(int_order)


def symbolic_f(t: ETerm, atom_compare: Callable = int_order) -> ETerm:
    if atom_compare is int_order:
        return NATURAL_ATOMS.symbolic_f(t)
    return ETermAlgebra(atom_compare).symbolic_f(t)


def e_denote(t: ETerm, atom_value: Callable[[Any], Ordinal]) -> Ordinal:
    """Read a term as an ordinal, atoms through ``atom_value``."""
    outer = []
    for inner, coefficient in t.terms:
        exponent = Ordinal([(atom_value(atom), d) for atom, d in inner])
        outer.append((exponent, coefficient))
    return Ordinal(outer)


def denote_E(n: int, t: ETerm) -> Ordinal:
    """Atom m of fin(n) is read as the ordinal m."""
    if any(atom >= n for atom in t.atoms()):
        raise DilatorError(f'{t} has atoms outside fin({n})')
    return e_denote(t, Ordinal.finite)


class EOrder(CodedOrder):
    """
    E(X). An atom x weighs cost(x)+1, an inner term weighs its atom's weight
    plus its coefficient, an outer term its inner form's weight plus its
    coefficient; the cost of a term is the sum.
    """

    def __init__(self, base: CodedOrder):
        self.base = base
        self.algebra = ETermAlgebra(base.compare)
        self.name = f'E({base})'
        self._inner_by_cost: Dict[int, List[Inner]] = {}
        super().__init__()

    def compare(self, s: ETerm, t: ETerm) -> Ordering:
        return self.algebra.compare(s, t)

    def _valid_form(self, form, key_ok, key_compare) -> bool:
        if not isinstance(form, tuple):
            return False
        for term in form:
            if not (isinstance(term, tuple) and len(term) == 2 and is_int(term[1]) and term[1] >= 1):
                return False
            if not key_ok(term[0]):
                return False
        return all(key_compare(a[0], b[0]) == Ordering.GREATER for a, b in zip(form, form[1:]))

    def contains(self, t) -> bool:
        if not isinstance(t, ETerm):
            return False
        inner_ok = partial(self._valid_form, key_ok=self.base.contains, key_compare=self.base.compare)
        return self._valid_form(t.terms, inner_ok, self.algebra.inner_compare)

    def check_member(self, t):
        if isinstance(t, ETerm) and not self.contains(t):
            raise DilatorError(f'{t} is not a canonical term of {self.name}')
        return super().check_member(t)

    def inner_cost(self, inner: Inner) -> int:
        return sum(self.base.cost(atom) + 1 + d for atom, d in inner)

    def cost(self, t: ETerm) -> int:
        return sum(self.inner_cost(inner) + c for inner, c in t.terms)

    def _atoms_weighing(self, weight: int) -> List[Any]:
        return self.base.level(weight - 1) if weight >= 1 else []

    def inner_of_cost(self, total: int) -> List[Inner]:
        if total not in self._inner_by_cost:
            self._inner_by_cost[total] = list(
                _forms_of_cost(self._atoms_weighing, self.base.compare, total, None)
            )
        return self._inner_by_cost[total]

    def _generate_levels(self):
        k = 0
        while True:
            yield [ETerm(form) for form in _forms_of_cost(self.inner_of_cost, self.algebra.inner_compare, k, None)]
            k += 1

    @property
    def is_finite(self):
        return False

    @property
    def has_denotation(self):
        return self.base.has_denotation

    def denote(self, t: ETerm) -> Ordinal:
        return e_denote(t, self.base.denote)

    def order_type(self):
        base_type = self.base.order_type()
        return None if base_type is None else omega_pow(omega_pow(base_type))


def _forms_of_cost(keys_weighing: Callable, key_compare: Callable, total: int, upper) -> Iterator[Tuple]:
    """Strictly descending (key, coefficient) forms below ``upper`` of the given total weight."""
    if total == 0:
        yield ()
        return
    for key_weight in range(total):
        for key in keys_weighing(key_weight):
            if upper is not None and key_compare(key, upper) != Ordering.LESS:
                continue
            for coefficient in range(1, total - key_weight + 1):
                for rest in _forms_of_cost(keys_weighing, key_compare, total - key_weight - coefficient, key):
                    yield ((key, coefficient),) + rest


class EDilator(PraeDilator):
    name = 'E'
    has_normal_data = True
    denotes_extensions = True

    def build(self, n):
        return EOrder(FiniteOrder(n))

    def apply(self, f, t: ETerm) -> ETerm:
        return t.rename(f)

    def supp(self, n, t: ETerm):
        return tuple(sorted(set(t.atoms())))

    def mu(self, n, m):
        return ETerm.tower(m)

    def normalize(self, n, t: ETerm):
        support = self.supp(n, t)
        index = {atom: i for i, atom in enumerate(support)}
        return support, t.rename(index.__getitem__)

    def denote_extension(self, base, element):
        return e_denote(element.sigma, lambda i: base.denote(element.support[i]))


E = EDilator()
