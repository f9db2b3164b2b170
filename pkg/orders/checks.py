"""
Desk-scale checks that report instead of raising.

Every check returns a ``CheckReport``: how many facts were examined and
every violation found, each with the elements that witness it.
"""
import logging
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional

from ordinals.cnf import Ordering

from .coded import CodedOrder, describe

logger = logging.getLogger('orders')


@dataclass
class Violation:
    kind: str
    message: str
    witnesses: Dict[str, str] = field(default_factory=dict)

    def __str__(self):
        detail = ', '.join(f'{key}={value}' for key, value in self.witnesses.items())
        return f'[{self.kind}] {self.message}' + (f' ({detail})' if detail else '')


@dataclass
class CheckReport:
    name: str
    checked: int = 0
    violations: List[Violation] = field(default_factory=list)
    parameters: Dict[str, str] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.violations

    def tick(self, count: int = 1):
        self.checked += count

    def fail(self, kind: str, message: str, **witnesses):
        violation = Violation(kind, message, {key: describe(value) for key, value in witnesses.items()})
        self.violations.append(violation)
        logger.warning(f'{self.name}: {violation}')
        return violation

    def kinds(self) -> List[str]:
        return sorted({violation.kind for violation in self.violations})

    def merge(self, other: 'CheckReport') -> 'CheckReport':
        self.checked += other.checked
        self.violations.extend(other.violations)
        return self

    def summary(self) -> str:
        bounds = ', '.join(f'{key}={value}' for key, value in self.parameters.items())
        text = f'{self.name}: {len(self.violations)} violations over {self.checked} checks'
        return f'{text} ({bounds})' if bounds else text

    def log(self, log: Optional[logging.Logger] = None):
        (log or logger).info(self.summary())
        return self


def check_linear_order(order: CodedOrder, bound: int = 200) -> CheckReport:
    """Irreflexivity, antisymmetry and totality-with-transitivity on the first ``bound`` elements."""
    report = CheckReport(f'linear order {order.name}', parameters={'bound': str(bound)})
    prefix = order.enumerate(bound)
    seen = set()
    for x in prefix:
        report.tick()
        if x in seen:
            report.fail('repeat', 'enumeration repeats an element', element=x)
        seen.add(x)
        if order.compare(x, x) != Ordering.EQUAL:
            report.fail('irreflexive', 'element is not equal to itself', element=x)
        if not order.contains(x):
            report.fail('membership', 'enumerated element is rejected by the order', element=x)
    ranked = order.sorted(prefix)
    for i, x in enumerate(ranked):
        for y in ranked[i + 1:]:
            report.tick()
            forward, backward = order.compare(x, y), order.compare(y, x)
            if forward != Ordering.LESS or backward != Ordering.GREATER:
                report.fail('total', 'sorted elements do not compare strictly', lower=x, upper=y)
    return report


def order_iso_check(
    source: CodedOrder,
    target: CodedOrder,
    h: Callable,
    bound: int,
    inverse: Optional[Callable] = None,
    iso: bool = False,
    name: Optional[str] = None,
) -> CheckReport:
    """
    Check that ``h`` is strictly order-preserving on all pairs among the
    first ``bound`` elements of ``source``. With ``iso`` set, also check
    that every one of the first ``bound`` elements of ``target`` is hit,
    through ``inverse`` when given and among the computed images otherwise.
    """
    report = CheckReport(name or f'embedding {source.name} -> {target.name}', parameters={'bound': str(bound)})
    prefix = source.sorted(source.enumerate(bound))
    images = []
    for x in prefix:
        image = h(x)
        report.tick()
        if not target.contains(image):
            report.fail('codomain', 'image is not an element of the target', element=x, image=image)
        images.append(image)
    for i, (x, hx) in enumerate(zip(prefix, images)):
        for y, hy in zip(prefix[i + 1:], images[i + 1:]):
            report.tick()
            if target.compare(hx, hy) != Ordering.LESS:
                report.fail('order', 'strict order is not preserved', lower=x, upper=y, image_lower=hx, image_upper=hy)
    if iso:
        hit = set(images)
        for y in target.enumerate(bound):
            report.tick()
            if inverse is not None:
                back = inverse(y)
                if not source.contains(back) or h(back) != y:
                    report.fail('surjective', 'inverse does not return a preimage', element=y, preimage=back)
            elif y not in hit:
                report.fail('surjective', 'element of the target is not hit', element=y)
    return report
