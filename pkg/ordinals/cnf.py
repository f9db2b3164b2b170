"""
Ordinals below epsilon_0 in Cantor normal form.

An ``Ordinal`` is the finite sequence of terms (exponent, coefficient) of
omega^e1*c1 + ... + omega^ek*ck with e1 > ... > ek and every ck >= 1. The
empty sequence is 0. Because the form is canonical, structural equality is
ordinal equality and hashing is safe.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum, IntEnum
from typing import Iterable, Optional, Tuple, Union

from .exceptions import OrdinalError

logger = logging.getLogger('ordinals')

# Largest finite exponents two_pow and power accept; 2^4096 has 1234 digits.
MAX_BINARY_EXPONENT = 1 << 12
MAX_FINITE_EXPONENT = 1 << 10


class Ordering(IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


class Kind(Enum):
    ZERO = 'zero'
    SUCCESSOR = 'successor'
    LIMIT = 'limit'


class Ordinal:
    """Canonical Cantor normal form term. Instances are immutable."""

    __slots__ = ('terms', '_hash')

    def __init__(self, terms: Iterable[Tuple['Ordinal', int]] = ()):
        normalized = []
        for exponent, coefficient in terms:
            if not isinstance(exponent, Ordinal):
                exponent = Ordinal.finite(exponent)
            if isinstance(coefficient, bool) or not isinstance(coefficient, int) or coefficient < 1:
                raise OrdinalError(f'coefficient must be a positive integer, got {coefficient!r}')
            if normalized and cmp(normalized[-1][0], exponent) != Ordering.GREATER:
                raise OrdinalError('exponents must be strictly decreasing')
            normalized.append((exponent, coefficient))
        object.__setattr__(self, 'terms', tuple(normalized))
        object.__setattr__(self, '_hash', None)

    @classmethod
    def _trusted(cls, terms):
        # Internal constructor for terms already known to be canonical.
        ins = object.__new__(cls)
        object.__setattr__(ins, 'terms', tuple(terms))
        object.__setattr__(ins, '_hash', None)
        return ins

    @classmethod
    def finite(cls, n: int) -> 'Ordinal':
        if isinstance(n, bool) or not isinstance(n, int):
            raise OrdinalError(f'finite ordinal expects an int, got {n!r}')
        if n < 0:
            raise OrdinalError('ordinals are never negative')
        if n == 0:
            return ZERO
        return cls._trusted(((ZERO, n),))

    @classmethod
    def coerce(cls, value: Union['Ordinal', int]) -> 'Ordinal':
        if isinstance(value, Ordinal):
            return value
        return cls.finite(value)

    def __setattr__(self, name, value):
        raise AttributeError('Ordinal is immutable')

    # --- structure -------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_finite(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and self.terms[0][0].is_zero)

    @property
    def leading_exponent(self) -> 'Ordinal':
        if not self.terms:
            raise OrdinalError('0 has no leading exponent')
        return self.terms[0][0]

    @property
    def finite_part(self) -> int:
        if self.terms and self.terms[-1][0].is_zero:
            return self.terms[-1][1]
        return 0

    @property
    def limit_part(self) -> 'Ordinal':
        if self.finite_part:
            return Ordinal._trusted(self.terms[:-1])
        return self

    def __int__(self):
        if not self.is_finite:
            raise OrdinalError(f'{self} is not finite')
        return self.finite_part

    def size(self) -> int:
        """Number of symbols: every term costs its coefficient plus its exponent's size."""
        return sum(exponent.size() + coefficient for exponent, coefficient in self.terms)

    # --- protocol --------------------------------------------------------

    def __hash__(self):
        if self._hash is None:
            value = self.finite_part if self.is_finite else self.terms
            object.__setattr__(self, '_hash', hash(value))
        return self._hash

    def __eq__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            return other >= 0 and self.is_finite and self.finite_part == other
        if isinstance(other, Ordinal):
            return self.terms == other.terms
        return NotImplemented

    def _cmp_other(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            if other < 0:
                return Ordering.GREATER
            other = Ordinal.finite(other)
        if not isinstance(other, Ordinal):
            return None
        return cmp(self, other)

    def __lt__(self, other):
        order = self._cmp_other(other)
        return NotImplemented if order is None else order < 0

    def __le__(self, other):
        order = self._cmp_other(other)
        return NotImplemented if order is None else order <= 0

    def __gt__(self, other):
        order = self._cmp_other(other)
        return NotImplemented if order is None else order > 0

    def __ge__(self, other):
        order = self._cmp_other(other)
        return NotImplemented if order is None else order >= 0

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other):
        if isinstance(other, (Ordinal, int)):
            return add(self, Ordinal.coerce(other))
        return NotImplemented

    def __radd__(self, other):
        if isinstance(other, int):
            return add(Ordinal.coerce(other), self)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, (Ordinal, int)):
            return mul(self, Ordinal.coerce(other))
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, int):
            return mul(Ordinal.coerce(other), self)
        return NotImplemented

    def __pow__(self, other):
        if not isinstance(other, (Ordinal, int)):
            return NotImplemented
        return power(self, Ordinal.coerce(other))

    def __rpow__(self, other):
        if isinstance(other, int):
            return power(Ordinal.coerce(other), self)
        return NotImplemented

    def __str__(self):
        return format_ordinal(self)

    def __repr__(self):
        return f'Ordinal({format_ordinal(self)})'

    def pretty(self) -> str:
        return format_ordinal(self, unicode=True)


ZERO = Ordinal._trusted(())
ONE = Ordinal._trusted(((ZERO, 1),))
TWO = Ordinal._trusted(((ZERO, 2),))
OMEGA = Ordinal._trusted(((ONE, 1),))


@dataclass(frozen=True)
class OrdKind:
    kind: Kind
    predecessor: Optional[Ordinal] = None

    @property
    def is_limit(self):
        return self.kind is Kind.LIMIT


def cmp(a: Ordinal, b: Ordinal) -> Ordering:
    """Lexicographic comparison of Cantor normal forms."""
    if a is b:
        return Ordering.EQUAL
    for (exp_a, coeff_a), (exp_b, coeff_b) in zip(a.terms, b.terms):
        order = cmp(exp_a, exp_b)
        if order:
            return order
        if coeff_a != coeff_b:
            return Ordering.LESS if coeff_a < coeff_b else Ordering.GREATER
    if len(a.terms) == len(b.terms):
        return Ordering.EQUAL
    return Ordering.LESS if len(a.terms) < len(b.terms) else Ordering.GREATER


def add(a: Ordinal, b: Ordinal) -> Ordinal:
    if b.is_zero:
        return a
    if a.is_zero:
        return b
    lead_exponent, lead_coefficient = b.terms[0]
    kept = []
    for exponent, coefficient in a.terms:
        order = cmp(exponent, lead_exponent)
        if order == Ordering.GREATER:
            kept.append((exponent, coefficient))
        elif order == Ordering.EQUAL:
            kept.append((exponent, coefficient + lead_coefficient))
            return Ordinal._trusted(tuple(kept) + b.terms[1:])
        else:
            break
    return Ordinal._trusted(tuple(kept) + b.terms)


def mul(a: Ordinal, b: Ordinal) -> Ordinal:
    if a.is_zero or b.is_zero:
        return ZERO
    lead_exponent, lead_coefficient = a.terms[0]
    product = ZERO
    for exponent, coefficient in b.terms:
        if exponent.is_zero:
            piece = Ordinal._trusted(((lead_exponent, lead_coefficient * coefficient),) + a.terms[1:])
        else:
            piece = Ordinal._trusted(((add(lead_exponent, exponent), coefficient),))
        product = add(product, piece)
    return product


def square(a: Ordinal) -> Ordinal:
    return mul(a, a)


def omega_pow(a: Ordinal) -> Ordinal:
    return Ordinal._trusted(((a, 1),))


def _drop_one(exponent: Ordinal) -> Ordinal:
    # The unique e' with 1 + e' = exponent, for exponent >= 1.
    if exponent.is_finite:
        return Ordinal.finite(exponent.finite_part - 1)
    return exponent


def two_pow(a: Ordinal) -> Ordinal:
    """2^a, using 2^(omega*b + n) = omega^b * 2^n."""
    n = a.finite_part
    if n > MAX_BINARY_EXPONENT:
        raise OrdinalError(f'finite part {n} of the exponent is too large for 2^x')
    reduced = tuple((_drop_one(exponent), coefficient) for exponent, coefficient in a.limit_part.terms)
    return Ordinal._trusted(((Ordinal._trusted(reduced), 1 << n),))


def power(base: Ordinal, exponent: Ordinal) -> Ordinal:
    """base^exponent for base omega or 2, or any base with a finite exponent."""
    if base == OMEGA:
        return omega_pow(exponent)
    if base == TWO:
        return two_pow(exponent)
    if exponent.is_finite:
        if exponent.finite_part > MAX_FINITE_EXPONENT:
            raise OrdinalError(f'exponent {exponent} is too large for base {base}')
        result = ONE
        for _ in range(exponent.finite_part):
            result = mul(result, base)
        return result
    raise OrdinalError(f'only bases w and 2 support infinite exponents, got base {base}')


def classify(a: Ordinal) -> OrdKind:
    if a.is_zero:
        return OrdKind(Kind.ZERO)
    if a.terms[-1][0].is_zero:
        return OrdKind(Kind.SUCCESSOR, decrement_last(a))
    return OrdKind(Kind.LIMIT)


def is_limit(a: Ordinal) -> bool:
    return bool(a.terms) and not a.terms[-1][0].is_zero


def decrement_last(a: Ordinal) -> Ordinal:
    """Remove one copy of the last term: the predecessor of a successor, mu for mu + omega^e."""
    if a.is_zero:
        raise OrdinalError('0 has no last term')
    exponent, coefficient = a.terms[-1]
    if coefficient == 1:
        return Ordinal._trusted(a.terms[:-1])
    return Ordinal._trusted(a.terms[:-1] + ((exponent, coefficient - 1),))


def successor(a: Ordinal) -> Ordinal:
    return add(a, ONE)


def is_add_principal(a: Ordinal) -> bool:
    return len(a.terms) == 1 and a.terms[0][1] == 1


def is_mult_principal(a: Ordinal) -> bool:
    if a == ONE or a == TWO:
        return True
    return is_add_principal(a) and is_add_principal(a.leading_exponent)


def is_add_principal_by_definition(a: Ordinal, samples: Iterable[Ordinal]) -> bool:
    """beta, gamma < a implies beta + gamma < a, checked over ``samples``."""
    if a.is_zero:
        return False
    below = [s for s in samples if s < a]
    return all(add(b, c) < a for b in below for c in below)


def is_mult_principal_by_definition(a: Ordinal, samples: Iterable[Ordinal]) -> bool:
    """beta, gamma < a implies beta * gamma < a, checked over ``samples``."""
    if a.is_zero:
        return False
    below = [s for s in samples if s < a]
    return all(mul(b, c) < a for b in below for c in below)


def _needs_parens(exponent: Ordinal) -> bool:
    if exponent.is_finite:
        return False
    return not is_add_principal(exponent)


def _digits(n: int) -> str:
    try:
        return str(n)
    except ValueError as exc:
        raise OrdinalError(f'coefficient with about {n.bit_length() * 3 // 10} digits is too long to print') from exc


def format_ordinal(a: Ordinal, unicode: bool = False) -> str:
    """Render ``a``; the ASCII form is accepted back by the expression parser."""
    if a.is_zero:
        return '0'
    omega = 'ω' if unicode else 'w'
    times = '·' if unicode else '*'
    plus = '+' if unicode else ' + '
    parts = []
    for exponent, coefficient in a.terms:
        if exponent.is_zero:
            parts.append(_digits(coefficient))
            continue
        if exponent == ONE:
            text = omega
        else:
            inner = format_ordinal(exponent, unicode)
            if _needs_parens(exponent):
                inner = f'({inner.replace(" ", "")})' if not unicode else f'({inner})'
            text = f'{omega}^{inner}'
        if coefficient > 1:
            text = f'{text}{times}{_digits(coefficient)}'
        parts.append(text)
    return plus.join(parts)
