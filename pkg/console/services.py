"""
One static method per ``ordlab`` subcommand.

Every method returns a ``CommandResult``: the data for the structured
document plus the lines printed in human mode. Library errors propagate
unchanged; the management command maps them to exit codes.
"""
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from dilators.extension import ExtensionOrder
from dilators.registry import get_dilator
from dilators.upper import J_embed, validate_upper_derivative, xi_build
from dilators.validators import validate_normal, validate_praedilator
from ordinal_lab.conf import bound
from ordinals.cnf import Ordering, cmp
from ordinals.exceptions import OrdinalError
from ordinals.expressions import parse_ordinal, parse_sequence
from ordinals.functions import DERIVATIVES, FUNCTIONS, fixed_points
from orders.checks import CheckReport
from orders.coded import CodedOrder, build_order, describe
from orders.exceptions import OrderMembershipError
from orders.serializers import CheckReportSerializer
from wellfounded.search import DescendingSearch

logger = logging.getLogger('console')

RELATIONS = {Ordering.LESS: '<', Ordering.EQUAL: '=', Ordering.GREATER: '>'}


@dataclass
class CommandResult:
    command: str
    inputs: Dict[str, str]
    result: Any
    witnesses: List[Dict[str, Any]] = field(default_factory=list)
    passed: bool = True
    lines: List[str] = field(default_factory=list)


def coerce_elements(order: CodedOrder, values) -> List[Any]:
    """Read parsed ordinals as elements of ``order``; finite ordinals also stand for naturals."""
    elements = []
    for value in values:
        if order.contains(value):
            elements.append(value)
        elif value.is_finite and order.contains(int(value)):
            elements.append(int(value))
        else:
            raise OrderMembershipError(f'{value} is not an element of {order.name}')
    return elements


def _denotation(order: CodedOrder, element) -> Optional[str]:
    return str(order.denote(element)) if order.has_denotation else None


def _report_lines(report: CheckReport) -> List[str]:
    return [report.summary()] + [f'  {violation}' for violation in report.violations]


class OrdLabService:

    @staticmethod
    def evaluate(expression: str) -> CommandResult:
        value = parse_ordinal(expression)
        return CommandResult(
            'eval', {'expression': expression},
            {'value': str(value), 'pretty': value.pretty()},
            lines=[str(value)],
        )

    @staticmethod
    def compare(left: str, right: str) -> CommandResult:
        a, b = parse_ordinal(left), parse_ordinal(right)
        relation = RELATIONS[cmp(a, b)]
        return CommandResult(
            'cmp', {'left': left, 'right': right},
            {'relation': relation, 'left': str(a), 'right': str(b)},
            lines=[f'{a} {relation} {b}'],
        )

    @staticmethod
    def apply_function(fn: str, expression: str) -> CommandResult:
        """f, g and their derivatives (``fprime``, ``gprime``)."""
        derived = fn.endswith('prime')
        name = fn[:-len('prime')] if derived else fn
        table = DERIVATIVES if derived else FUNCTIONS
        if name not in table:
            raise OrdinalError(f'unknown function {fn!r}')
        argument = parse_ordinal(expression)
        value = table[name](argument)
        result = {'argument': str(argument), 'value': str(value), 'fixed_point': value == argument}
        return CommandResult(fn, {'expression': expression}, result, lines=[str(value)])

    @staticmethod
    def fixed(fn: str, below: str, count: int) -> CommandResult:
        limit = parse_ordinal(below)
        values = [str(v) for v in fixed_points(fn, limit, count)]
        return CommandResult(
            'fix', {'fn': fn, 'below': below, 'count': str(count)},
            {'values': values},
            lines=values,
        )

    @staticmethod
    def dil_check(name: str, size: Optional[int] = None, elements: Optional[int] = None, upper: bool = False) -> CommandResult:
        size = bound('SIZE_BOUND') if size is None else size
        elements = bound('ELEMENT_BOUND') if elements is None else elements
        dilator = get_dilator(name)
        reports = [validate_praedilator(dilator, size, elements)]
        if dilator.has_normal_data:
            reports.append(validate_normal(dilator, size, elements))
        if upper:
            G = xi_build()
            if dilator is not G.S:
                raise OrdinalError(f'only E carries an upper derivative here, not {name}')
            reports.append(validate_upper_derivative(G, size, elements))
        passed = all(report.passed for report in reports)
        witnesses = [
            {'report': report.name, 'kind': v.kind, 'message': v.message, 'witnesses': v.witnesses}
            for report in reports for v in report.violations
        ]
        lines = [line for report in reports for line in _report_lines(report)]
        return CommandResult(
            'dil-check', {'dilator': name, 'size': str(size), 'elements': str(elements)},
            {'passed': passed, 'reports': CheckReportSerializer(reports, many=True).data},
            witnesses, passed, lines,
        )

    @staticmethod
    def dil_extend(name: str, order_spec: str, count: int) -> CommandResult:
        extension = ExtensionOrder(get_dilator(name), build_order(order_spec))
        listed = [
            {'index': i, 'element': describe(e), 'denotes': _denotation(extension, e)}
            for i, e in enumerate(extension.enumerate(count))
        ]
        lines = [
            f'{item["index"]}: {item["element"]}' + (f'  = {item["denotes"]}' if item['denotes'] is not None else '')
            for item in listed
        ]
        return CommandResult(
            'dil-extend', {'dilator': name, 'order': order_spec, 'count': str(count)},
            {'order': extension.name, 'elements': listed},
            lines=lines,
        )

    @staticmethod
    def embed_j(order_spec: str, sequence_text: str) -> CommandResult:
        base = build_order(order_spec)
        sequence = tuple(coerce_elements(base, parse_sequence(sequence_text)))
        j = J_embed(base, xi_build())
        image = j(sequence)
        steps = []
        for start in range(len(sequence), -1, -1):
            suffix = sequence[start:]
            value = j(suffix)
            steps.append({'sequence': describe(suffix), 'image': str(value), 'denotes': _denotation(j.target, value)})
        lines = [
            f'J{step["sequence"]} = {step["image"]}' + (f'  = {step["denotes"]}' if step['denotes'] is not None else '')
            for step in steps
        ]
        return CommandResult(
            'embed-j', {'order': order_spec, 'sequence': sequence_text},
            {'target': j.target.name, 'image': str(image), 'steps': steps, 'defaults_used': j.defaults_used},
            lines=lines,
        )

    @staticmethod
    def wf_search(order_spec: str, budget: int, strategy: str, seed: Optional[int] = None) -> CommandResult:
        order = build_order(order_spec)
        search = DescendingSearch(order, budget, strategy, seed)
        chain = search.run()
        result = {
            'found': chain is not None,
            'chain': chain.rendered() if chain is not None else None,
            'comparisons': search.comparisons,
            'reason': search.reason,
        }
        if chain is not None:
            lines = [f'descending chain of length {len(chain)} in {order.name}:', f'  {chain}']
        else:
            lines = [f'no descending chain of length {budget} in {order.name} ({search.reason})']
        return CommandResult(
            'wf-search',
            {'order': order_spec, 'budget': str(budget), 'strategy': strategy, 'seed': str(search.seed)},
            result, lines=lines,
        )

    @staticmethod
    def export_t0(name: str, size: int, count: int) -> CommandResult:
        """The pairs (n, sigma) coding T restricted to n <= size, first ``count`` elements of each T(n)."""
        dilator = get_dilator(name)
        records = [
            [n, describe(sigma)]
            for n in range(size + 1)
            for sigma in dilator.at(n).enumerate(count)
        ]
        return CommandResult(
            'export-T0', {'dilator': name, 'size': str(size), 'count': str(count)},
            {'records': records},
            lines=[f'({n}, {code})' for n, code in records],
        )
