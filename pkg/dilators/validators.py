"""
Exhaustive desk-scale validators for prae-dilators and normal data.

Both validators run every embedding between orders of size at most N
against the first K enumerated elements of each T(n), and report every
violation with its witnesses rather than stopping at the first one.
"""
import logging
from typing import Dict, List, Optional

from ordinal_lab.conf import bound
from ordinals.cnf import Ordering
from orders.checks import CheckReport
from orders.embeddings import compose, embeddings_up_to, identity

from .base import PraeDilator, reconstruct

logger = logging.getLogger('dilators')


def resolve_bounds(size_bound: Optional[int], element_bound: Optional[int]):
    size_bound = bound('SIZE_BOUND') if size_bound is None else size_bound
    element_bound = bound('ELEMENT_BOUND') if element_bound is None else element_bound
    return size_bound, element_bound


def _prefixes(dilator: PraeDilator, size_bound: int, element_bound: int) -> Dict[int, List]:
    return {n: dilator.at(n).enumerate(element_bound) for n in range(size_bound + 1)}


def _is_support(support, n) -> bool:
    if not isinstance(support, tuple):
        return False
    if any(not 0 <= i < n for i in support):
        return False
    return all(a < b for a, b in zip(support, support[1:]))


def validate_praedilator(
    dilator: PraeDilator,
    size_bound: Optional[int] = None,
    element_bound: Optional[int] = None,
) -> CheckReport:
    """Functoriality, order preservation, naturality of supports and the support condition."""
    size_bound, element_bound = resolve_bounds(size_bound, element_bound)
    report = CheckReport(
        f'prae-dilator {dilator.name}',
        parameters={'N': str(size_bound), 'K': str(element_bound)},
    )
    prefixes = _prefixes(dilator, size_bound, element_bound)

    for n, prefix in prefixes.items():
        for sigma in prefix:
            report.tick()
            if dilator.apply(identity(n), sigma) != sigma:
                report.fail('functor', 'T(id) moves an element', n=n, element=sigma)
            support = dilator.supp(n, sigma)
            if not _is_support(support, n):
                report.fail('support', 'support is not an increasing subset of n', n=n, element=sigma, support=support)
                continue
            if reconstruct(dilator, n, sigma, support) is None:
                report.fail(
                    'support-condition', 'element is not in the image of T(en) for its support',
                    n=n, element=sigma, support=support,
                )

    for f in embeddings_up_to(size_bound):
        m, n = f.domain, f.codomain
        target = dilator.at(n)
        ranked = dilator.at(m).sorted(prefixes[m])
        images = []
        for sigma in ranked:
            image = dilator.apply(f, sigma)
            images.append(image)
            report.tick()
            if not target.contains(image):
                report.fail('codomain', 'T(f) leaves T(n)', f=f, element=sigma, image=image)
                continue
            moved = tuple(f(i) for i in dilator.supp(m, sigma))
            if dilator.supp(n, image) != moved:
                report.fail(
                    'naturality', 'supp(T(f)(s)) differs from f[supp(s)]',
                    f=f, element=sigma, expected=moved, found=dilator.supp(n, image),
                )
        for (lower, upper), (image_lower, image_upper) in zip(zip(ranked, ranked[1:]), zip(images, images[1:])):
            report.tick()
            if target.compare(image_lower, image_upper) != Ordering.LESS:
                report.fail('order', 'T(f) is not strictly increasing', f=f, lower=lower, upper=upper)

    for f in embeddings_up_to(size_bound):
        for g in embeddings_up_to(size_bound):
            if f.codomain != g.domain:
                continue
            composite = compose(f, g)
            for sigma in prefixes[f.domain]:
                report.tick()
                if dilator.apply(composite, sigma) != dilator.apply(g, dilator.apply(f, sigma)):
                    report.fail('functor', 'T(g.f) differs from T(g).T(f)', f=f, g=g, element=sigma)

    report.log(logger)
    return report


def validate_normal(
    dilator: PraeDilator,
    size_bound: Optional[int] = None,
    element_bound: Optional[int] = None,
) -> CheckReport:
    """sigma < mu_n(m) iff supp_n(sigma) is contained in m, plus monotonicity and naturality of mu."""
    size_bound, element_bound = resolve_bounds(size_bound, element_bound)
    report = CheckReport(
        f'normal prae-dilator {dilator.name}',
        parameters={'N': str(size_bound), 'K': str(element_bound)},
    )
    if not dilator.has_normal_data:
        report.fail('normal-data', f'{dilator.name} carries no normal data')
        return report.log(logger)

    for n in range(1, size_bound + 1):
        order = dilator.at(n)
        marks = [dilator.mu(n, m) for m in range(n)]
        for m, mark in enumerate(marks):
            report.tick()
            if not order.contains(mark):
                report.fail('mu', 'mu_n(m) is not an element of T(n)', n=n, m=m, mu=mark)
        for m in range(1, n):
            report.tick()
            if order.compare(marks[m - 1], marks[m]) != Ordering.LESS:
                report.fail('mu', 'mu_n is not strictly increasing', n=n, m=m)
        for sigma in order.enumerate(element_bound):
            support = dilator.supp(n, sigma)
            for m, mark in enumerate(marks):
                report.tick()
                below = order.compare(sigma, mark) == Ordering.LESS
                contained = all(i < m for i in support)
                if below != contained:
                    report.fail(
                        'biconditional', 'sigma < mu_n(m) disagrees with supp(sigma) contained in m',
                        n=n, m=m, element=sigma, mu=mark, support=support,
                    )

    for f in embeddings_up_to(size_bound):
        for i in range(f.domain):
            report.tick()
            if dilator.apply(f, dilator.mu(f.domain, i)) != dilator.mu(f.codomain, f(i)):
                report.fail('mu-naturality', 'T(f)(mu_m(i)) differs from mu_n(f(i))', f=f, i=i)

    if size_bound >= 1:
        report.tick()
        if dilator.supp(1, dilator.mu(1, 0)) != (0,):
            report.fail('mu', 'supp_1(mu_1(0)) must be {0}', mu=dilator.mu(1, 0))

    report.log(logger)
    return report
