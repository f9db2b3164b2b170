from django.core.management.base import BaseCommand, CommandError

from console.serializers import render_document
from console.services import OrdLabService
from ordinal_lab.exceptions import OrdinalLabError
from ordinals.exceptions import ExpressionSyntaxError
from wellfounded.search import GREEDY, STRATEGIES


class Command(BaseCommand):
    help = 'Ordinal arithmetic, dilator checks, the J embedding and descending-chain search.'

    def add_arguments(self, parser):
        sub = parser.add_subparsers(dest='subcommand', required=True)

        def command(name, help):
            p = sub.add_parser(name, help=help)
            p.add_argument('--json', action='store_true', help='Print one JSON document instead of text')
            return p

        p = command('eval', 'Evaluate an ordinal expression')
        p.add_argument('expression')

        p = command('cmp', 'Compare two ordinal expressions')
        p.add_argument('left')
        p.add_argument('right')

        for fn in ('f', 'g', 'fprime', 'gprime'):
            p = command(fn, f'Apply {fn}')
            p.add_argument('expression')

        p = command('fix', 'Fixed points of f or g below a bound')
        p.add_argument('--fn', choices=['f', 'g'], default='f')
        p.add_argument('--below', required=True)
        p.add_argument('--count', type=int, default=3)

        p = command('dil-check', 'Run the prae-dilator and normality validators')
        p.add_argument('dilator')
        p.add_argument('--size', type=int, default=None, help='N: largest finite order checked')
        p.add_argument('--elements', type=int, default=None, help='K: elements enumerated per T(n)')
        p.add_argument('--upper', action='store_true', help='Also check the upper derivative (E only)')

        p = command('dil-extend', 'First elements of D^T(X)')
        p.add_argument('dilator')
        p.add_argument('--order', required=True, help='e.g. fin(3), ordinal(w^2), pow2(ordinal(w))')
        p.add_argument('--count', type=int, default=10)

        p = command('embed-j', 'J on a descending sequence, with G = (E, xi)')
        p.add_argument('--order', required=True)
        p.add_argument('--sequence', required=True, help='comma-separated, strictly descending')

        p = command('wf-search', 'Bounded search for a descending chain')
        p.add_argument('--order', required=True)
        p.add_argument('--budget', type=int, default=20)
        p.add_argument('--strategy', choices=STRATEGIES, default=GREEDY)
        p.add_argument('--seed', type=int, default=None)

        p = command('export-T0', 'Records (n, element) coding a prae-dilator')
        p.add_argument('dilator')
        p.add_argument('--size', type=int, default=3)
        p.add_argument('--count', type=int, default=10)

    def run(self, subcommand, options):
        if subcommand == 'eval':
            return OrdLabService.evaluate(options['expression'])
        if subcommand == 'cmp':
            return OrdLabService.compare(options['left'], options['right'])
        if subcommand in ('f', 'g', 'fprime', 'gprime'):
            return OrdLabService.apply_function(subcommand, options['expression'])
        if subcommand == 'fix':
            return OrdLabService.fixed(options['fn'], options['below'], options['count'])
        if subcommand == 'dil-check':
            return OrdLabService.dil_check(options['dilator'], options['size'], options['elements'], options['upper'])
        if subcommand == 'dil-extend':
            return OrdLabService.dil_extend(options['dilator'], options['order'], options['count'])
        if subcommand == 'embed-j':
            return OrdLabService.embed_j(options['order'], options['sequence'])
        if subcommand == 'wf-search':
            return OrdLabService.wf_search(options['order'], options['budget'], options['strategy'], options['seed'])
        return OrdLabService.export_t0(options['dilator'], options['size'], options['count'])

    def handle(self, *args, **options):
        subcommand = options['subcommand']
        try:
            result = self.run(subcommand, options)
        except ExpressionSyntaxError as e:
            raise CommandError(f'{e}\n{e.caret()}', returncode=2)
        except OrdinalLabError as e:
            raise CommandError(str(e), returncode=2)

        if options['json']:
            self.stdout.write(render_document(result))
        else:
            style = self.style.SUCCESS if result.passed else self.style.ERROR
            for line in result.lines:
                self.stdout.write(line)
            if subcommand == 'dil-check':
                self.stdout.write(style('PASS' if result.passed else 'FAIL'))
            elif subcommand == 'embed-j' and result.result['defaults_used']:
                self.stdout.write(self.style.WARNING(f'default clause used {result.result["defaults_used"]} times'))

        if not result.passed:
            raise SystemExit(1)
