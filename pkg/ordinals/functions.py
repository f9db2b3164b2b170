"""
The normal functions f and g and their derivatives.

    f(0) = 1,  f(a+1) = f(a) + 1 + a,      f continuous at limits
    g(0) = 1,  g(a+1) = (a+1) * 2,          g continuous at limits

f(a) = 1 + sum_below(a) where sum_below(a) is the ordinal sum of 1 + c over
all c < a, evaluated by recursion on the Cantor normal form of a.
"""
import logging
from typing import List

from .cnf import (
    ONE, TWO, ZERO, Ordinal, add, classify, decrement_last, mul, omega_pow, Kind,
)
from .exceptions import OrdinalError

logger = logging.getLogger('ordinals')


def _sum_below_limit(limit: Ordinal) -> Ordinal:
    # Sum over c < mu + omega^b is sum over c < mu plus omega^h, where
    # h = lead(mu) + b when mu > 0 and h = decrement_last(b) + b when mu = 0.
    (first, first_coefficient), *rest = limit.terms
    total = omega_pow(add(decrement_last(first), first))
    if first_coefficient > 1:
        total = add(total, mul(omega_pow(add(first, first)), Ordinal.finite(first_coefficient - 1)))
    for exponent, coefficient in rest:
        total = add(total, mul(omega_pow(add(first, exponent)), Ordinal.finite(coefficient)))
    return total


def sum_below(alpha: Ordinal) -> Ordinal:
    """Ordinal sum of (1 + c) over every c < alpha."""
    limit, n = alpha.limit_part, alpha.finite_part
    if limit.is_zero:
        return Ordinal.finite(n * (n + 1) // 2)
    total = _sum_below_limit(limit)
    if n:
        # Summands limit + i for i < n add up to limit*n + (n-1).
        total = add(total, add(mul(limit, Ordinal.finite(n)), Ordinal.finite(n - 1)))
    return total


def f_eval(alpha: Ordinal) -> Ordinal:
    return add(ONE, sum_below(alpha))


def g_eval(alpha: Ordinal) -> Ordinal:
    kind = classify(alpha)
    if kind.kind is Kind.ZERO:
        return ONE
    if kind.kind is Kind.SUCCESSOR:
        return mul(alpha, TWO)
    # sup of c*2 over c < mu + omega^e is mu*2 + omega^e
    return add(decrement_last(alpha), alpha)


def f_derivative(alpha: Ordinal) -> Ordinal:
    return omega_pow(omega_pow(alpha))


def g_derivative(alpha: Ordinal) -> Ordinal:
    return omega_pow(add(ONE, alpha))


FUNCTIONS = {
    'f': f_eval,
    'g': g_eval,
}

DERIVATIVES = {
    'f': f_derivative,
    'g': g_derivative,
}


def fixed_points(fn: str, below: Ordinal, count: int) -> List[Ordinal]:
    """
    The first ``count`` fixed points of ``fn`` strictly below ``below``, ascending.

    Enumerates the derivative at 0, 1, 2, ...; every fixed point with an
    infinite index lies above all those with finite index, so stopping on the
    count or on the first value >= below is exact.
    """
    if fn not in DERIVATIVES:
        raise OrdinalError(f'unknown function {fn!r}; expected one of {sorted(DERIVATIVES)}')
    derivative = DERIVATIVES[fn]
    index = ZERO
    found = []
    while len(found) < count:
        value = derivative(index)
        if value >= below:
            break
        found.append(value)
        index = add(index, ONE)
    logger.debug(f'{len(found)} fixed points of {fn} below {below}')
    return found
