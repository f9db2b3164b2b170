"""
Fundamental sequences for limit ordinals below epsilon_0.

    omega^(b+1)[n]          = omega^b * n
    omega^lam[n]            = omega^(lam[n])
    (mu + omega^b)[n]       = mu + omega^b[n]
    omega^b*(c+1)[n]        = omega^b*c + omega^b[n]
"""
import logging
from typing import Callable, Optional

from ordinal_lab.conf import bound

from .cnf import Ordinal, ZERO, add, classify, decrement_last, is_limit, mul, omega_pow
from .exceptions import OrdinalError

logger = logging.getLogger('ordinals')


def fund_seq(limit: Ordinal, n: int) -> Ordinal:
    if not is_limit(limit):
        raise OrdinalError(f'{limit} is not a limit ordinal')
    if n < 0:
        raise OrdinalError('fundamental sequences are indexed by naturals')
    exponent, _ = limit.terms[-1]
    prefix = decrement_last(limit)
    kind = classify(exponent)
    if kind.predecessor is not None:
        tail = mul(omega_pow(kind.predecessor), Ordinal.finite(n)) if n else ZERO
    else:
        tail = omega_pow(fund_seq(exponent, n))
    return add(prefix, tail)


def supremum_witness(
    limit: Ordinal,
    target: Ordinal,
    fn: Optional[Callable[[Ordinal], Ordinal]] = None,
    search_bound: Optional[int] = None,
) -> Optional[int]:
    """
    Least n <= search_bound with target <= fn(limit[n]), or None.

    With ``fn`` omitted this witnesses that ``target`` lies below the
    supremum of the fundamental sequence itself.
    """
    if search_bound is None:
        search_bound = bound('SUPREMUM_SEARCH_BOUND')
    for n in range(search_bound + 1):
        value = fund_seq(limit, n)
        if fn is not None:
            value = fn(value)
        if target <= value:
            return n
    logger.debug(f'no witness for {target} below sup of {limit}[n], n <= {search_bound}')
    return None
