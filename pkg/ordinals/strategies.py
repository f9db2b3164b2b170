"""Hypothesis strategies and seeded samplers for canonical ordinals."""
import random
from typing import List

from hypothesis import strategies as st

from .cnf import OMEGA, Ordinal, cmp, is_limit, omega_pow

coefficients = st.integers(min_value=1, max_value=3)


def from_pairs(pairs) -> Ordinal:
    """Canonical ordinal from (exponent, coefficient) pairs in any order; repeated exponents keep the first."""
    seen = {}
    for exponent, coefficient in pairs:
        seen.setdefault(exponent, coefficient)
    ordered = sorted(seen.items(), key=lambda item: _SortKey(item[0]), reverse=True)
    return Ordinal(ordered)


class _SortKey:
    __slots__ = ('value',)

    def __init__(self, value):
        self.value = value

    def __lt__(self, other):
        return cmp(self.value, other.value) < 0


def cnf_ordinals(exponents, max_terms=3):
    return st.lists(st.tuples(exponents, coefficients), max_size=max_terms).map(from_pairs)


finite_exponents = st.integers(min_value=0, max_value=3).map(Ordinal.finite)

# exponents below omega^4, plus omega^omega itself
exponents = st.one_of(cnf_ordinals(finite_exponents, max_terms=2), st.just(omega_pow(OMEGA)))

ordinals = cnf_ordinals(exponents, max_terms=3)

nonzero_ordinals = ordinals.filter(lambda a: not a.is_zero)

limit_ordinals = ordinals.filter(is_limit)

small_ordinals = cnf_ordinals(finite_exponents, max_terms=2)


def _random_ordinal(rng: random.Random, depth: int) -> Ordinal:
    pairs = []
    for _ in range(rng.randint(0, 3)):
        if depth == 0 or rng.random() < 0.5:
            exponent = Ordinal.finite(rng.randint(0, 3))
        elif rng.random() < 0.2:
            exponent = omega_pow(OMEGA)
        else:
            exponent = _random_ordinal(rng, depth - 1)
        pairs.append((exponent, rng.randint(1, 3)))
    return from_pairs(pairs)


def sample_ordinals(count: int, seed: int = 0) -> List[Ordinal]:
    """Deterministic sample: up to 3 terms, exponents below omega^4 or omega^omega, coefficients <= 3."""
    rng = random.Random(seed)
    return [_random_ordinal(rng, 1) for _ in range(count)]
