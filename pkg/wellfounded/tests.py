from django.test import SimpleTestCase, override_settings

from dilators.composition import Zeta, dext_xi
from dilators.exponential import E
from dilators.extension import ExtensionOrder
from dilators.normal_f import F, Eta, square_embed, square_target
from dilators.upper import J_embed, xi_E, xi_build
from ordinals.cnf import OMEGA
from orders.coded import BOTTOM, FiniteOrder, IntegerOrder, LexSquare, OrdinalOrder, PowerOrder, build_order

from .chains import DescendingChain, chain_transfer, stabilize_index
from .exceptions import ChainError, ChainTransferError, SearchError
from .search import GREEDY, RANDOM, DescendingSearch, descending_search

W = OMEGA


def falling(order, count):
    """The first ``count`` enumerated elements of ``order``, largest first."""
    return DescendingChain(order, tuple(reversed(order.sorted(order.enumerate(count)))))


class DescendingChainTests(SimpleTestCase):

    def test_valid_chain(self):
        chain = DescendingChain(FiniteOrder(5), [4, 2, 0])
        self.assertEqual(len(chain), 3)
        self.assertEqual(chain.elements, (4, 2, 0))
        self.assertEqual(str(chain), '4 > 2 > 0')

    def test_rejects_non_descending(self):
        with self.assertRaises(ChainError):
            DescendingChain(FiniteOrder(5), (1, 3))
        with self.assertRaises(ChainError):
            DescendingChain(FiniteOrder(5), (2, 2))
        with self.assertRaises(ChainError):
            DescendingChain(FiniteOrder(2), (5,))


class StabilizeIndexTests(SimpleTestCase):

    def setUp(self):
        self.square = LexSquare(FiniteOrder(10))

    def test_examples(self):
        self.assertEqual(stabilize_index(DescendingChain(self.square, ((2, 5), (2, 3), (2, 1)))), 0)
        self.assertEqual(stabilize_index(DescendingChain(self.square, ((3, 0), (2, 9), (2, 4)))), 1)
        self.assertEqual(stabilize_index(DescendingChain(self.square, ((7, BOTTOM),))), 0)

    def test_last_element_alone(self):
        chain = DescendingChain(self.square, ((4, 2), (3, 8), (1, BOTTOM)))
        self.assertEqual(stabilize_index(chain), 2)

    def test_needs_a_square(self):
        with self.assertRaises(ChainError):
            stabilize_index(DescendingChain(FiniteOrder(3), (2, 1)))


class ChainTransferTests(SimpleTestCase):

    def test_identity(self):
        chain = DescendingChain(FiniteOrder(6), (5, 3, 1))
        self.assertEqual(chain_transfer(lambda x: x, chain, FiniteOrder(6)).elements, chain.elements)

    def test_failure_carries_witnesses(self):
        chain = DescendingChain(FiniteOrder(6), (5, 3, 1))
        with self.assertRaises(ChainTransferError) as caught:
            chain_transfer(lambda x: 0, chain, FiniteOrder(6))
        self.assertEqual(caught.exception.index, 1)
        self.assertEqual((caught.exception.upper, caught.exception.lower), (5, 3))
        with self.assertRaises(ChainTransferError):
            chain_transfer(lambda x: x + 10, chain, FiniteOrder(6))

    def test_along_J(self):
        base = FiniteOrder(4)
        power = PowerOrder(base)
        sequences = ((3, 2), (3, 1), (3,))
        self.assertTrue(power.lt(sequences[1], sequences[0]))
        self.assertTrue(power.lt(sequences[2], sequences[1]))
        j = J_embed(base, xi_build())
        image = chain_transfer(j, DescendingChain(power, sequences), j.target)
        self.assertEqual(len(image), 3)
        self.assertEqual(image.order.name, ExtensionOrder(E, base).name)

    def test_along_square_after_eta(self):
        base = FiniteOrder(3)
        eta = Eta(base)
        chain = falling(eta.source, eta.source.size)
        image = chain_transfer(lambda e: square_embed(eta(e)), chain, square_target(base))
        self.assertEqual(len(image), 7)
        self.assertEqual(image[-1], (BOTTOM, BOTTOM))

    def test_shipped_embeddings_never_fail(self):
        G = xi_build()
        for base in (FiniteOrder(3), OrdinalOrder(W * 2)):
            eta = Eta(base)
            chain_transfer(eta, falling(eta.source, 60), eta.target)
            z = Zeta(F, E, base)
            chain_transfer(z, falling(z.source, 40), z.target)
            extended = dext_xi(F, E, xi_E, base)
            chain_transfer(extended, falling(ExtensionOrder(G.composite, base), 40), ExtensionOrder(E, base))
            j = J_embed(base, G)
            chain_transfer(j, falling(j.source, 40), j.target)


class DescendingSearchTests(SimpleTestCase):

    def test_finds_chains_in_the_integers(self):
        for strategy in (GREEDY, RANDOM):
            search = DescendingSearch(IntegerOrder(), 20, strategy, seed=0)
            chain = search.run()
            self.assertIsNotNone(chain, strategy)
            self.assertEqual(len(chain), 20)
            self.assertLessEqual(search.comparisons, 20 * 50)

    def test_seeded_search_is_deterministic(self):
        first = descending_search(IntegerOrder(), 20, RANDOM, seed=7)
        second = descending_search(IntegerOrder(), 20, RANDOM, seed=7)
        self.assertEqual(first.elements, second.elements)

    def test_well_orders_yield_nothing(self):
        for spec in ('ordinal(w^2)', 'pow2(ordinal(w))', 'pow2(ordinal(w^2))'):
            with self.subTest(order=spec):
                search = DescendingSearch(build_order(spec), 30)
                self.assertIsNone(search.run())
                self.assertIn('budget', search.reason)

    def test_extension_of_F_yields_nothing(self):
        for alpha in (W, W ** 2):
            self.assertIsNone(descending_search(ExtensionOrder(F, OrdinalOrder(alpha)), 30))

    def test_finite_orders_run_out(self):
        search = DescendingSearch(FiniteOrder(30), 20)
        self.assertIsNone(search.run())
        self.assertEqual(search.reason, 'order exhausted')

    @override_settings(ORDLAB={'CHAIN_WINDOW': 5, 'CHAIN_COMPARISON_FACTOR': 50})
    def test_window_comes_from_settings(self):
        search = DescendingSearch(IntegerOrder(), 10)
        self.assertEqual(search.window, 5)
        self.assertEqual(len(search.run()), 10)

    def test_unknown_strategy(self):
        with self.assertRaises(SearchError):
            descending_search(IntegerOrder(), 5, 'sideways')
