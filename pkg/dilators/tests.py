from functools import cmp_to_key, partial

from django.test import SimpleTestCase
from hypothesis import given, settings, strategies as st

from ordinals.cnf import OMEGA, ZERO, Ordinal, omega_pow
from ordinals.functions import f_eval
from ordinals.strategies import coefficients
from orders.checks import check_linear_order, order_iso_check
from orders.coded import BOTTOM, FiniteOrder, IntegerOrder, LexSquare, OrdinalOrder, int_order
from orders.embeddings import embeddings_up_to, identity, make_embedding
from orders.exceptions import OrderMembershipError, SequenceError

from .base import reconstruct
from .composition import Composite, Zeta, dext_xi
from .exceptions import DilatorError, SupportError
from .exponential import (
    E, ONE_TERM, ZERO_TERM, ETerm, denote_E, inner_compare, symbolic_f,
)
from .extension import ExtElement, ExtensionOrder, ext_map, ext_mu, ext_supp, fT_prefix_denotation, wrap
from .normal_f import F, Eta, FOrder, FPair, f_val, square_embed
from .registry import get_dilator
from .upper import (
    JEmbedding, UpperDerivative, descending_sequences, validate_embedding,
    validate_upper_derivative, xi_E, xi_F, xi_build,
)
from .validators import validate_normal, validate_praedilator
from .zoo import ConstantDilator, HollowDilator, IdentityDilator, SuccessorDilator, zoo

W = OMEGA


def term(*outer):
    """term(((0, 2),), 3), ((), 1)) is w^(w^[0]*2)*3 + 1."""
    return ETerm(tuple(outer))


def _canonical(pairs, compare):
    merged = {}
    for key, coefficient in pairs:
        merged.setdefault(key, coefficient)
    key = cmp_to_key(compare)
    return tuple(sorted(merged.items(), key=lambda item: key(item[0]), reverse=True))


def eterms(n):
    if n:
        atoms = st.integers(min_value=0, max_value=n - 1)
        inner = st.lists(st.tuples(atoms, coefficients), max_size=2).map(partial(_canonical, compare=int_order))
    else:
        inner = st.just(())
    outer = st.lists(st.tuples(inner, coefficients), max_size=3).map(partial(_canonical, compare=inner_compare))
    return outer.map(ETerm)


class PraeDilatorValidatorTests(SimpleTestCase):

    def test_identity_passes(self):
        self.assertTrue(validate_praedilator(IdentityDilator(), size_bound=5).passed)
        self.assertTrue(validate_normal(IdentityDilator(), size_bound=5).passed)

    def test_F_passes_both_validators(self):
        report = validate_praedilator(F, size_bound=6, element_bound=60)
        self.assertTrue(report.passed, report.violations[:3])
        self.assertGreater(report.checked, 0)
        self.assertTrue(validate_normal(F, size_bound=6, element_bound=60).passed)

    def test_E_passes_both_validators(self):
        report = validate_praedilator(E, size_bound=6, element_bound=60)
        self.assertTrue(report.passed, report.violations[:3])
        self.assertTrue(validate_normal(E, size_bound=6, element_bound=60).passed)

    def test_zoo_instances_are_prae_dilators(self):
        for name in ('identity', 'successor', 'successor_top_mu', 'lift', 'constant_0', 'constant_2'):
            with self.subTest(name=name):
                self.assertTrue(validate_praedilator(zoo(name), size_bound=6, element_bound=50).passed)

    def test_lift_is_normal(self):
        self.assertTrue(validate_normal(zoo('lift'), size_bound=6).passed)

    def test_successor_has_no_normal_data(self):
        report = validate_normal(SuccessorDilator(), size_bound=4)
        self.assertFalse(report.passed)
        self.assertEqual(report.kinds(), ['normal-data'])
        with self.assertRaises(DilatorError):
            SuccessorDilator().mu(1, 0)

    def test_misassigned_mu_fails(self):
        report = validate_normal(zoo('successor_top_mu'), size_bound=4)
        self.assertFalse(report.passed)
        self.assertIn('biconditional', report.kinds())
        self.assertIn('mu', report.kinds())
        witness = report.violations[0].witnesses
        self.assertTrue(witness)

    def test_empty_supports_fail_the_support_condition(self):
        report = validate_praedilator(HollowDilator(F), size_bound=3, element_bound=20)
        self.assertIn('support-condition', report.kinds())
        failure = next(v for v in report.violations if v.kind == 'support-condition')
        self.assertEqual(failure.witnesses['support'], '<>')
        self.assertIn('element', failure.witnesses)

    def test_zoo_examples(self):
        self.assertEqual(zoo('identity').at(3).size, 3)
        successor = zoo('successor')
        self.assertEqual(successor.at(0).elements(), [0])
        self.assertEqual(successor.supp(0, 0), ())
        constant = zoo('constant_2')
        for f in embeddings_up_to(4):
            for sigma in constant.at(f.domain).elements():
                self.assertEqual(constant.apply(f, sigma), sigma)

    def test_unknown_zoo_name(self):
        with self.assertRaises(DilatorError):
            zoo('exponential')
        with self.assertRaises(DilatorError):
            ConstantDilator(-1)

    def test_reconstruct_finds_the_unique_preimage(self):
        sigma = FPair(4, 1)
        self.assertEqual(reconstruct(F, 6, sigma, (1, 4)), FPair(1, 0))
        self.assertEqual(F.normalize(6, sigma), ((1, 4), FPair(1, 0)))
        self.assertIsNone(reconstruct(F, 6, sigma, (1,)))


class ExtensionTests(SimpleTestCase):

    def test_sizes_follow_f(self):
        self.assertEqual(ExtensionOrder(F, FiniteOrder(0)).elements(), [ExtElement((), BOTTOM)])
        self.assertEqual(ExtensionOrder(F, FiniteOrder(2)).size, 4)

    def test_counting_oracle(self):
        sizes = [ExtensionOrder(F, FiniteOrder(n)).size for n in range(8)]
        self.assertEqual(sizes, [1, 2, 4, 7, 11, 16, 22, 29])
        self.assertEqual(sizes, [int(f_eval(Ordinal.finite(n))) for n in range(8)])

    def test_identity_extension_is_the_base(self):
        base = FiniteOrder(5)
        extension = ExtensionOrder(IdentityDilator(), base)
        report = order_iso_check(extension, base, lambda e: e.support[0], 5, iso=True)
        self.assertTrue(report.passed)
        self.assertEqual(extension.size, 5)

    def test_ext_map_renames_supports(self):
        shift = ext_map(F, lambda x: x + 1, target=FiniteOrder(2))
        self.assertEqual(shift(ExtElement((0,), FPair(0))), ExtElement((1,), FPair(0)))
        same = ext_map(F, lambda x: x)
        for e in ExtensionOrder(F, FiniteOrder(3)).elements():
            self.assertEqual(same(e), e)

    def test_ext_map_is_functorial_and_increasing(self):
        source, middle = ExtensionOrder(F, FiniteOrder(3)), ExtensionOrder(F, FiniteOrder(5))
        target = ExtensionOrder(F, FiniteOrder(9))
        first, then = (lambda x: 2 * x), (lambda x: x + 3)
        composite = ext_map(F, lambda x: then(first(x)))
        stepwise = lambda e: ext_map(F, then)(ext_map(F, first)(e))
        for e in source.enumerate(20):
            self.assertEqual(composite(e), stepwise(e))
            self.assertEqual(ext_supp(composite(e)), tuple(then(first(a)) for a in ext_supp(e)))
        self.assertTrue(order_iso_check(source, middle, ext_map(F, first), 20).passed)
        self.assertTrue(order_iso_check(source, target, composite, 20).passed)

    def test_ext_mu(self):
        base = FiniteOrder(3)
        self.assertEqual(ext_mu(F, base, 1), ExtElement((1,), FPair(0, BOTTOM)))
        order = ExtensionOrder(F, base)
        for x in range(3):
            self.assertTrue(order.lt(ExtElement((), BOTTOM), ext_mu(F, base, x)))
        self.assertFalse(order.lt(ExtElement((2,), FPair(0)), ext_mu(F, base, 1)))
        with self.assertRaises(OrderMembershipError):
            ext_mu(F, base, 3)

    def test_cofinality_law(self):
        for dilator in (F, E):
            base = FiniteOrder(4)
            order = ExtensionOrder(dilator, base)
            for e in order.enumerate(80):
                for x in range(4):
                    self.assertEqual(
                        order.lt(e, ext_mu(dilator, base, x)),
                        all(a < x for a in e.support),
                        (dilator.name, str(e), x),
                    )

    def test_full_support_enforced(self):
        order = ExtensionOrder(F, FiniteOrder(3))
        with self.assertRaises(SupportError):
            order.check_member(ExtElement((0, 1), FPair(1, BOTTOM)))
        self.assertFalse(order.contains(ExtElement((1, 0), FPair(1, 0))))
        for e in order.elements():
            self.assertTrue(F.is_full_support(len(e.support), e.sigma))

    def test_denotation_shadows_the_induced_function(self):
        for alpha in (W * 2, W ** 2 + 1):
            values, report = fT_prefix_denotation(ExtensionOrder(F, OrdinalOrder(alpha)), 100, f_eval(alpha))
            self.assertTrue(report.passed, [str(v) for v in report.violations])
            self.assertEqual(len(values), 100)

    def test_prefix_denotation_reports_a_low_bound(self):
        values, report = fT_prefix_denotation(ExtensionOrder(F, OrdinalOrder(W)), 20, Ordinal.finite(5))
        self.assertFalse(report.passed)
        self.assertEqual(report.kinds(), ['bound'])
        self.assertEqual(len(report.violations), sum(1 for value in values if value >= 5))
        with self.assertRaises(OrderMembershipError):
            fT_prefix_denotation(ExtensionOrder(F, IntegerOrder()), 5)

    def test_wrap_keeps_only_used_positions(self):
        self.assertEqual(wrap(F, ('a', 'b', 'c'), 3, FPair(2, 0)), ExtElement(('a', 'c'), FPair(1, 0)))
        self.assertEqual(wrap(E, (5, 7), 2, ETerm.tower(1)), ExtElement((7,), ETerm.tower(0)))


class CompositionTests(SimpleTestCase):

    def test_successor_squared(self):
        double = Composite(SuccessorDilator(), SuccessorDilator())
        self.assertEqual(double.at(2).size, 4)
        self.assertTrue(validate_praedilator(double, size_bound=4, element_bound=30).passed)

    def test_identity_outer_is_the_inner(self):
        composite = Composite(IdentityDilator(), F)
        for n in range(5):
            self.assertEqual(composite.at(n).size, F.at(n).size)

    def test_F_after_E_is_normal(self):
        composite = Composite(F, E)
        self.assertEqual(composite.name, 'F.E')
        self.assertTrue(composite.has_normal_data)
        self.assertTrue(validate_praedilator(composite, size_bound=3, element_bound=25).passed)
        self.assertTrue(validate_normal(composite, size_bound=3, element_bound=25).passed)
        self.assertTrue(check_linear_order(composite.at(0), 5).passed)

    def test_composite_mu(self):
        composite = Composite(F, E)
        self.assertEqual(composite.mu(3, 1), ExtElement((ETerm.tower(1),), FPair(0)))


class ZetaTests(SimpleTestCase):

    def test_identity_case(self):
        z = Zeta(IdentityDilator(), IdentityDilator(), FiniteOrder(3))
        for e in z.source.elements():
            mapped = z(e)
            self.assertEqual(mapped.support, e.support[0].support)
            self.assertEqual(z.inverse(mapped), e)

    def test_successor_case_is_a_bijection(self):
        z = Zeta(SuccessorDilator(), SuccessorDilator(), FiniteOrder(2))
        self.assertEqual(z.source.size, z.target.size)
        report = order_iso_check(z.source, z.target, z, z.source.size, inverse=z.inverse, iso=True)
        self.assertTrue(report.passed)

    def test_F_E_is_an_isomorphism_on_prefixes(self):
        z = Zeta(F, E, FiniteOrder(2))
        report = order_iso_check(z.source, z.target, z, 40, inverse=z.inverse, iso=True)
        self.assertTrue(report.passed, report.violations[:3])

    def test_mu_law(self):
        for size in (1, 2, 3):
            base = FiniteOrder(size)
            z = Zeta(F, E, base)
            for x in range(size):
                inner = ext_mu(E, base, x)
                self.assertEqual(z(ext_mu(F, z.inner_extension, inner)), ext_mu(z.composite, base, x))


class DextXiTests(SimpleTestCase):

    def test_identity_family(self):
        base = FiniteOrder(2)
        extended = dext_xi(IdentityDilator(), E, lambda n, rho: rho.support[0], base)
        for e in ExtensionOrder(E, base).enumerate(30):
            self.assertEqual(extended(ExtElement(e.support, ExtElement((e.sigma,), 0))), e)

    def test_mu_law(self):
        G = xi_build()
        base = FiniteOrder(1)
        extended = dext_xi(F, E, xi_E, base)
        self.assertEqual(extended(ext_mu(G.composite, base, 0)), ext_mu(E, base, 0))

    def test_order_preserving(self):
        G = xi_build()
        base = FiniteOrder(2)
        extended = dext_xi(F, E, xi_E, base)
        report = order_iso_check(ExtensionOrder(G.composite, base), ExtensionOrder(E, base), extended, 60)
        self.assertTrue(report.passed)


class NormalFTests(SimpleTestCase):

    def test_small_orders(self):
        self.assertEqual(FOrder(FiniteOrder(1)).elements(), [BOTTOM, FPair(0)])
        self.assertEqual(FOrder(FiniteOrder(4)).size, 11)
        self.assertEqual(F.supp(2, FPair(1, 0)), (0, 1))
        self.assertEqual(F.mu(5, 3), FPair(3, BOTTOM))
        for t in FOrder(FiniteOrder(3)).elements()[1:]:
            self.assertTrue(FOrder(FiniteOrder(3)).lt(BOTTOM, t))

    def test_malformed_terms_rejected(self):
        order = FOrder(FiniteOrder(2))
        for t in (FPair(0, 1), FPair(1, 1)):
            self.assertFalse(order.contains(t))
            with self.assertRaises(DilatorError):
                order.check_member(t)

    def test_eta_examples(self):
        base = FiniteOrder(5)
        eta = Eta(base)
        self.assertEqual(eta(ExtElement((1, 3), FPair(1, 0))), FPair(3, 1))
        self.assertIs(eta(ExtElement((), BOTTOM)), BOTTOM)
        for x in range(5):
            self.assertEqual(eta(ext_mu(F, base, x)), F.mu(5, x))

    def test_eta_is_an_isomorphism_on_finite_orders(self):
        for n in range(7):
            eta = Eta(FiniteOrder(n))
            size = eta.source.size
            self.assertEqual(size, eta.target.size)
            report = order_iso_check(eta.source, eta.target, eta, size, inverse=eta.inverse, iso=True)
            self.assertTrue(report.passed, (n, report.violations[:3]))

    def test_eta_on_omega_squared(self):
        base = OrdinalOrder(W ** 2)
        eta = Eta(base)
        report = order_iso_check(eta.source, eta.target, eta, 100, inverse=eta.inverse, iso=True)
        self.assertTrue(report.passed)
        for x in base.enumerate(30):
            self.assertEqual(eta(ext_mu(F, base, x)), FPair(x))

    def test_square_embedding(self):
        self.assertEqual(square_embed(BOTTOM), (BOTTOM, BOTTOM))
        self.assertEqual(square_embed(FPair(2)), (2, BOTTOM))
        base = FiniteOrder(4)
        self.assertTrue(order_iso_check(FOrder(base), LexSquare(base), square_embed, 11).passed)

    def test_square_after_eta(self):
        for n in range(7):
            base = FiniteOrder(n)
            eta = Eta(base)
            report = order_iso_check(eta.source, LexSquare(base), lambda e: square_embed(eta(e)), eta.source.size)
            self.assertTrue(report.passed)

    def test_rank_examples(self):
        base = OrdinalOrder(W * 2)
        self.assertEqual(f_val(BOTTOM, base), ZERO)
        self.assertEqual(f_val(FPair(W), base), W)
        self.assertEqual(f_val(FPair(W, Ordinal.finite(3)), base), W + 4)

    def test_rank_is_increasing_below_f(self):
        for alpha in (Ordinal.finite(5), W * 2, W ** 2 + 1, W ** 2 * 2):
            order = FOrder(OrdinalOrder(alpha))
            _, report = fT_prefix_denotation(order, 200, f_eval(alpha))
            self.assertTrue(report.passed, [str(v) for v in report.violations])
            self.assertEqual(order.order_type(), f_eval(alpha))


class ExponentialTests(SimpleTestCase):

    def test_atomless_terms_are_the_naturals(self):
        self.assertEqual(E.at(0).enumerate(4), [ETerm.finite(k) for k in range(4)])
        self.assertEqual([denote_E(0, t) for t in E.at(0).enumerate(4)], [0, 1, 2, 3])

    def test_mu_examples(self):
        self.assertEqual(E.mu(2, 1), ETerm.tower(1))
        self.assertEqual(denote_E(2, E.mu(2, 1)), W ** W)
        sigma = term((((0, 3),), 2))
        self.assertTrue(E.at(2).lt(sigma, E.mu(2, 1)))
        self.assertEqual(E.supp(2, sigma), (0,))
        self.assertEqual(str(sigma), 'w^(w^[0]*3)*2')

    def test_denote_examples(self):
        self.assertEqual(denote_E(3, ZERO_TERM), ZERO)
        self.assertEqual(denote_E(2, term((((1, 1),), 1))), W ** W)
        self.assertEqual(denote_E(1, term((((0, 2),), 3), ((), 1))), W ** 2 * 3 + 1)
        with self.assertRaises(DilatorError):
            denote_E(1, ETerm.tower(1))

    def test_denote_is_increasing(self):
        for n in range(4):
            order = E.at(n)
            ranked = order.sorted(order.enumerate(150))
            values = [denote_E(n, t) for t in ranked]
            for lower, upper in zip(values, values[1:]):
                self.assertLess(lower, upper)
            self.assertLess(values[-1], omega_pow(omega_pow(Ordinal.finite(n))))
            self.assertEqual(order.order_type(), omega_pow(omega_pow(Ordinal.finite(n))))

    def test_non_canonical_terms_rejected(self):
        order = E.at(2)
        repeated = term((((0, 1),), 1), (((0, 1),), 1))
        ascending = term((((0, 1), (1, 1)), 1))
        zero_coefficient = term((((0, 0),), 1))
        foreign = ETerm.tower(2)
        for t in (repeated, ascending, zero_coefficient, foreign):
            self.assertFalse(order.contains(t), str(t))
        with self.assertRaises(DilatorError):
            order.check_member(repeated)

    def test_symbolic_f_examples(self):
        self.assertEqual(symbolic_f(ZERO_TERM), ONE_TERM)
        for x in range(3):
            self.assertEqual(symbolic_f(ETerm.tower(x)), ETerm.tower(x))
        omega_plus_one = term((((0, 1),), 1), ((), 1))
        self.assertEqual(symbolic_f(omega_plus_one), term((((0, 1),), 2)))
        self.assertEqual(symbolic_f(ETerm.finite(4)), ETerm.finite(11))

    def test_symbolic_f_matches_f_on_enumerated_terms(self):
        for n in range(4):
            for t in E.at(n).enumerate(75):
                self.assertEqual(denote_E(n, symbolic_f(t)), f_eval(denote_E(n, t)), (n, str(t)))

    @given(st.integers(min_value=0, max_value=3).flatmap(lambda n: st.tuples(st.just(n), eterms(n))))
    @settings(max_examples=300, deadline=None)
    def test_symbolic_f_matches_f(self, case):
        n, t = case
        self.assertEqual(denote_E(n, symbolic_f(t)), f_eval(denote_E(n, t)))

    @given(eterms(0))
    @settings(max_examples=50, deadline=None)
    def test_atomless_terms_denote_naturals(self, t):
        self.assertEqual(t.atoms(), [])
        self.assertTrue(denote_E(0, t).is_finite)
        self.assertEqual(symbolic_f(t), ETerm.finite(int(f_eval(denote_E(0, t)))))

    def test_symbolic_f_commutes_with_renaming(self):
        for f in embeddings_up_to(3):
            for t in E.at(f.domain).enumerate(40):
                self.assertEqual(symbolic_f(E.apply(f, t)), E.apply(f, symbolic_f(t)))


class UpperDerivativeTests(SimpleTestCase):

    def setUp(self):
        self.G = xi_build()

    def test_xi_examples(self):
        self.assertEqual(xi_E(0, ExtElement((), BOTTOM)), ZERO_TERM)
        for n in range(1, 4):
            for x in range(n):
                tower = ETerm.tower(x)
                self.assertEqual(xi_E(n, ExtElement((tower,), FPair(0))), tower)
                self.assertEqual(xi_E(n, ExtElement((ZERO_TERM, tower), FPair(1, 0))), term((((x, 1),), 1), ((), 1)))

    def test_mu_law_is_exact(self):
        for n in range(1, 5):
            for m in range(n):
                self.assertEqual(self.G.xi(n, self.G.composite.mu(n, m)), E.mu(n, m))

    def test_validator_passes(self):
        report = validate_upper_derivative(self.G, size_bound=4, element_bound=60)
        self.assertTrue(report.passed, report.violations[:3])
        self.assertGreater(report.checked, 10 ** 4)

    def test_broken_family_fails(self):
        broken = UpperDerivative(E, lambda n, rho: ZERO_TERM)
        report = validate_upper_derivative(broken, size_bound=2, element_bound=20)
        self.assertIn('order', report.kinds())
        self.assertIn('mu-law', report.kinds())

    def test_needs_normal_data(self):
        with self.assertRaises(DilatorError):
            UpperDerivative(SuccessorDilator(), lambda n, rho: rho)


class JEmbeddingTests(SimpleTestCase):

    def setUp(self):
        self.G = xi_build()

    def test_xi_F_examples(self):
        base = FiniteOrder(3)
        xf = xi_F(base, self.G)
        self.assertEqual(xf.target.denote(xf(BOTTOM)), ZERO)
        for x in range(3):
            mark = ext_mu(E, base, x)
            self.assertEqual(xf(FPair(mark)), mark)

    def test_xi_F_is_increasing(self):
        xf = xi_F(FiniteOrder(2), self.G)
        self.assertTrue(order_iso_check(xf.source, xf.target, xf, 60).passed)

    def test_small_values(self):
        j = JEmbedding(FiniteOrder(1), self.G)
        self.assertEqual(j(()), j.xi_F(BOTTOM))
        self.assertEqual(j.target.denote(j((0,))), W + 1)
        self.assertTrue(j.target.lt(j(()), j((0,))))

    def test_empty_sequence_is_least(self):
        j = JEmbedding(FiniteOrder(4), self.G)
        for x in range(4):
            self.assertTrue(j.target.lt(j(()), j((x,))))

    def test_order_embedding_and_invariant(self):
        for base in (FiniteOrder(5), OrdinalOrder(W), OrdinalOrder(W ** 2)):
            with self.subTest(base=base.name):
                j = JEmbedding(base, self.G)
                points = base.enumerate(6)
                sequences = list(descending_sequences(base, points, 4))
                report = validate_embedding(j, sequences, points)
                self.assertTrue(report.passed, report.violations[:3])
                self.assertEqual(j.defaults_used, 0)

    def test_rejects_non_descending_input(self):
        j = JEmbedding(FiniteOrder(3), self.G)
        for bad in ((0, 1), (1, 1), (3,)):
            with self.assertRaises(SequenceError):
                j(bad)


class RegistryTests(SimpleTestCase):

    def test_names(self):
        self.assertIs(get_dilator('F'), F)
        self.assertIs(get_dilator(' E '), E)
        self.assertEqual(get_dilator('constant_3').at(0).size, 3)
        self.assertEqual(get_dilator('hollow_F').name, 'hollow_F')

    def test_compositions(self):
        for spelling in ('F.E', 'F∘E', 'F . E'):
            composite = get_dilator(spelling)
            self.assertIsInstance(composite, Composite)
            self.assertEqual(composite.name, 'F.E')
        self.assertEqual(get_dilator('successor.successor.identity').at(1).size, 3)

    def test_unknown(self):
        for name in ('G', 'F..E', 'hollow_'):
            with self.assertRaises(DilatorError):
                get_dilator(name)

    def test_identity_embedding_helpers(self):
        self.assertEqual(F.apply(identity(3), FPair(2, 0)), FPair(2, 0))
        self.assertEqual(E.apply(make_embedding(1, 3, (2,)), ETerm.tower(0)), ETerm.tower(2))
