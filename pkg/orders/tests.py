from itertools import combinations
from math import comb

from django.test import SimpleTestCase

from ordinals.cnf import OMEGA, Ordinal
from .checks import check_linear_order, order_iso_check
from .coded import (
    BOTTOM, FiniteOrder, IntegerOrder, LexSquare, LiftOrder, OrdinalOrder, PowerOrder,
    build_order, describe,
)
from .embeddings import (
    FinSubset, compose, en, enumerate_all, identity, inclusion, make_embedding, restrict,
)
from .exceptions import EmbeddingError, OrderMembershipError, OrderSpecError

W = OMEGA


class EmbeddingTests(SimpleTestCase):

    def test_identity(self):
        self.assertEqual(identity(3).values, (0, 1, 2))

    def test_enumerate_all_counts(self):
        self.assertEqual(len(list(enumerate_all(2, 3))), 3)
        for n in range(7):
            for m in range(n + 1):
                found = list(enumerate_all(m, n))
                self.assertEqual(len(found), comb(n, m))
                self.assertEqual(len(set(found)), len(found))

    def test_compose(self):
        first = make_embedding(2, 3, (0, 2))
        then = make_embedding(3, 5, (1, 3, 4))
        self.assertEqual(compose(first, then), make_embedding(2, 5, (1, 4)))

    def test_rejects_bad_values(self):
        with self.assertRaises(EmbeddingError):
            make_embedding(2, 3, (1, 1))
        with self.assertRaises(EmbeddingError):
            make_embedding(2, 3, (0, 3))
        with self.assertRaises(EmbeddingError):
            make_embedding(2, 3, (0,))
        with self.assertRaises(EmbeddingError):
            compose(identity(2), identity(3))

    def test_category_laws(self):
        for f in enumerate_all(2, 4):
            self.assertEqual(compose(identity(2), f), f)
            self.assertEqual(compose(f, identity(4)), f)
            for g in enumerate_all(4, 5):
                for h in enumerate_all(5, 6):
                    self.assertEqual(compose(compose(f, g), h), compose(f, compose(g, h)))


class FinSubsetTests(SimpleTestCase):

    def setUp(self):
        self.order = FiniteOrder(10)

    def test_enumeration(self):
        self.assertEqual(en(FinSubset.of(self.order, [4]))(0), 4)
        self.assertEqual(en(FinSubset.of(self.order, [6, 2, 5]))(1), 5)

    def test_duplicates_rejected(self):
        with self.assertRaises(EmbeddingError):
            FinSubset.of(self.order, [3, 3])

    def test_restrict_inclusion(self):
        small = FinSubset.of(self.order, [3, 7])
        large = FinSubset.of(self.order, [1, 3, 7])
        self.assertEqual(inclusion(small, large), make_embedding(2, 3, (1, 2)))

    def test_restrict_commutes_with_enumerations(self):
        source = FinSubset.of(self.order, [0, 2, 4])
        target = FinSubset.of(self.order, [1, 3, 5, 7, 9])
        shift = lambda x: 2 * x + 1
        embedding = restrict(shift, source, target)
        for i in range(len(source)):
            self.assertEqual(target.en(embedding(i)), shift(source.en(i)))

    def test_restrict_rejects_order_reversal(self):
        source = FinSubset.of(self.order, [1, 2])
        with self.assertRaises(EmbeddingError):
            restrict(lambda x: 3 - x, source, source.union(FinSubset.of(self.order, [1, 2]), self.order))

    def test_restrict_respects_composition(self):
        universe = range(5)
        subsets = [FinSubset.of(self.order, c) for k in range(5) for c in combinations(universe, k)]
        for a in subsets:
            for b in subsets:
                if not set(a) <= set(b):
                    continue
                for c in subsets:
                    if set(b) <= set(c):
                        self.assertEqual(inclusion(a, c), compose(inclusion(a, b), inclusion(b, c)))


class CodedOrderTests(SimpleTestCase):

    def test_pow2_of_two(self):
        self.assertEqual(PowerOrder(FiniteOrder(2)).elements(), [(), (0,), (1,), (1, 0)])

    def test_pow2_counts(self):
        for n in range(11):
            self.assertEqual(PowerOrder(FiniteOrder(n)).size, 2 ** n)

    def test_lift_of_empty(self):
        self.assertEqual(LiftOrder(FiniteOrder(0)).elements(), [BOTTOM])

    def test_ordinal_enumeration(self):
        self.assertEqual(OrdinalOrder(W).enumerate(3), [0, 1, 2])
        self.assertEqual(OrdinalOrder(W ** 2).enumerate(7), [0, 1, 2, W, 3, W + 1, W * 2])
        self.assertEqual(OrdinalOrder(Ordinal.finite(4)).elements(), [0, 1, 2, 3])
        self.assertEqual(OrdinalOrder(Ordinal.finite(0)).elements(), [])

    def test_integers(self):
        order = IntegerOrder()
        self.assertEqual(order.enumerate(3), [0, -1, -2])
        self.assertFalse(order.is_finite)
        with self.assertRaises(OrderMembershipError):
            order.elements()

    def test_lex_square(self):
        order = LexSquare(FiniteOrder(1))
        self.assertEqual(order.elements(), [(BOTTOM, BOTTOM), (BOTTOM, 0), (0, BOTTOM), (0, 0)])

    def test_membership(self):
        order = PowerOrder(FiniteOrder(3))
        self.assertTrue(order.contains((2, 0)))
        self.assertFalse(order.contains((0, 2)))
        self.assertFalse(order.contains((3,)))
        with self.assertRaises(OrderMembershipError):
            order.check_member((1, 1))

    def test_every_built_order_is_linear(self):
        orders = [
            FiniteOrder(5), OrdinalOrder(W ** 2), LiftOrder(OrdinalOrder(W)), LexSquare(FiniteOrder(3)),
            LexSquare(OrdinalOrder(W)), PowerOrder(OrdinalOrder(W)), PowerOrder(OrdinalOrder(W ** 2)),
            IntegerOrder(),
        ]
        for order in orders:
            report = check_linear_order(order, bound=200)
            self.assertTrue(report.passed, report.summary())

    def test_denotations_preserve_order(self):
        ordinal = OrdinalOrder(W ** 2)
        self.assertTrue(order_iso_check(ordinal, ordinal, ordinal.denote, 50).passed)
        square = LexSquare(FiniteOrder(3))
        report = order_iso_check(square, OrdinalOrder(Ordinal.finite(16)), square.denote, 16, iso=True)
        self.assertTrue(report.passed, report.summary())
        power = PowerOrder(OrdinalOrder(W))
        self.assertTrue(order_iso_check(power, OrdinalOrder(W), power.denote, 60).passed)

    def test_order_types(self):
        self.assertEqual(PowerOrder(OrdinalOrder(W + 2)).order_type(), W * 4)
        self.assertEqual(LiftOrder(OrdinalOrder(W)).order_type(), W)
        self.assertIsNone(PowerOrder(IntegerOrder()).order_type())

    def test_build_order(self):
        self.assertEqual(build_order('pow2(ordinal(w))').name, 'pow2(ordinal(w))')
        self.assertEqual(build_order('lex_square( fin(2) )').name, 'lex_square(fin(2))')
        self.assertIsInstance(build_order('integers'), IntegerOrder)
        for bad in ('foo(3)', 'fin(x)', 'fin', 'fin(-1)', '((('):
            with self.assertRaises(OrderSpecError):
                build_order(bad)

    def test_describe(self):
        self.assertEqual(describe((BOTTOM, W + 1)), '<bot,w + 1>')


class IsoCheckTests(SimpleTestCase):

    def test_identity_passes(self):
        order = FiniteOrder(4)
        report = order_iso_check(order, order, lambda x: x, 4, iso=True)
        self.assertTrue(report.passed)
        self.assertGreater(report.checked, 0)

    def test_constant_map_fails_with_witnesses(self):
        order = FiniteOrder(2)
        report = order_iso_check(order, order, lambda x: 0, 2)
        self.assertFalse(report.passed)
        self.assertEqual(report.kinds(), ['order'])
        self.assertEqual(report.violations[0].witnesses['lower'], '0')
        self.assertEqual(report.violations[0].witnesses['upper'], '1')

    def test_missing_elements_reported(self):
        report = order_iso_check(FiniteOrder(2), FiniteOrder(3), lambda x: x, 3, iso=True)
        self.assertEqual(report.kinds(), ['surjective'])
