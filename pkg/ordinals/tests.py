import sys
from unittest import skipUnless

from django.test import SimpleTestCase
from hypothesis import given, settings, strategies as st

from .cnf import (
    MAX_BINARY_EXPONENT, MAX_FINITE_EXPONENT, OMEGA, ONE, TWO, ZERO, Kind, Ordering, Ordinal,
    add, classify, cmp, decrement_last,
    is_add_principal, is_add_principal_by_definition, is_limit, is_mult_principal,
    is_mult_principal_by_definition, mul, omega_pow, power, square, successor, two_pow,
)
from .exceptions import ExpressionSyntaxError, OrdinalError
from .expressions import BinOp, Literal, Omega, parse_expr, parse_ordinal, parse_sequence
from .functions import (
    f_derivative, f_eval, fixed_points, g_derivative, g_eval, sum_below,
)
from .fundamental import fund_seq, supremum_witness
from .strategies import limit_ordinals, nonzero_ordinals, ordinals, sample_ordinals, small_ordinals

W = OMEGA


def fin(n):
    return Ordinal.finite(n)


class CnfArithmeticTests(SimpleTestCase):

    def test_cmp_examples(self):
        self.assertEqual(cmp(ZERO, ZERO), Ordering.EQUAL)
        self.assertEqual(cmp(W, W + 1), Ordering.LESS)
        self.assertEqual(cmp(W * 2 + 1, W ** 2), Ordering.LESS)

    def test_add_and_mul_examples(self):
        self.assertEqual(add(ONE, W), W)
        self.assertEqual(add(W + 1, W + 1), W * 2 + 1)
        self.assertEqual(mul(W + 1, TWO), W * 2 + 1)
        self.assertEqual(mul(TWO, W), W)
        self.assertEqual(square(W + 1), W ** 2 + W + 1)

    def test_exponentials(self):
        self.assertEqual(omega_pow(ZERO), ONE)
        self.assertEqual(two_pow(W), W)
        self.assertEqual(two_pow(W + 2), W * 4)
        self.assertEqual(two_pow(fin(5)), fin(32))
        self.assertEqual(two_pow(W ** 2), W ** W)

    def test_constructor_rejects_non_canonical_terms(self):
        with self.assertRaises(OrdinalError):
            Ordinal([(ONE, 1), (TWO, 1)])
        with self.assertRaises(OrdinalError):
            Ordinal([(ONE, 0)])
        with self.assertRaises(OrdinalError):
            Ordinal.finite(-1)

    def test_classify(self):
        self.assertEqual(classify(ZERO).kind, Kind.ZERO)
        kind = classify(W + 3)
        self.assertEqual(kind.kind, Kind.SUCCESSOR)
        self.assertEqual(kind.predecessor, W + 2)
        self.assertEqual(classify(W ** 2 * 2).kind, Kind.LIMIT)

    def test_principal_examples(self):
        self.assertTrue(is_add_principal(W ** 3))
        self.assertFalse(is_add_principal(W * 2))
        self.assertFalse(is_mult_principal(W ** 2))
        self.assertTrue(is_mult_principal(W ** W))
        self.assertTrue(is_mult_principal(ONE))
        self.assertTrue(is_mult_principal(TWO))
        self.assertFalse(is_mult_principal(fin(3)))

    def test_principal_predicates_agree_with_definitions(self):
        samples = [ZERO, ONE, TWO, W, W + 1, W ** 2, W ** W, W ** W + 1]
        candidates = [ONE, TWO, fin(3), W, W + 1, W * 2, W ** 2, W ** W, W ** W * 2,
                      W ** (W + 1), W ** (W ** 2), W ** (W * 2)]
        for a in candidates:
            self.assertEqual(is_add_principal(a), is_add_principal_by_definition(a, samples), a)
            self.assertEqual(is_mult_principal(a), is_mult_principal_by_definition(a, samples), a)

    def test_printing(self):
        self.assertEqual(str(W ** W + W * 2 + 3), 'w^w + w*2 + 3')
        self.assertEqual(str(W ** (W + 1)), 'w^(w+1)')
        self.assertEqual(str(W ** (W ** 2)), 'w^w^2')
        self.assertEqual((W ** 2 * 3 + 1).pretty(), 'ω^2·3+1')
        self.assertEqual(str(ZERO), '0')

    def test_finite_ordinals_hash_like_ints(self):
        self.assertEqual(len({Ordinal.finite(3), 3}), 1)
        self.assertEqual(len({ZERO, 0, ONE, 1, W}), 3)
        self.assertEqual({fin(7): 'seven'}[7], 'seven')

    def test_exponent_caps(self):
        self.assertEqual(str(two_pow(fin(MAX_BINARY_EXPONENT))), str(2 ** MAX_BINARY_EXPONENT))
        with self.assertRaises(OrdinalError):
            two_pow(fin(MAX_BINARY_EXPONENT + 1))
        self.assertEqual(power(W + 1, fin(MAX_FINITE_EXPONENT)).leading_exponent, fin(MAX_FINITE_EXPONENT))
        with self.assertRaises(OrdinalError):
            power(W + 1, fin(2 ** 32))

    @skipUnless(getattr(sys, 'get_int_max_str_digits', lambda: 0)(), 'no limit on integer printing')
    def test_unprintable_coefficients_raise(self):
        with self.assertRaises(OrdinalError):
            str(fin(10 ** 5000))
        with self.assertRaises(OrdinalError):
            str(W * (10 ** 5000) + 1)

    @given(ordinals, ordinals, ordinals)
    @settings(max_examples=200, deadline=None)
    def test_add_is_associative(self, a, b, c):
        self.assertEqual(add(add(a, b), c), add(a, add(b, c)))

    @given(ordinals, ordinals, ordinals)
    @settings(max_examples=200, deadline=None)
    def test_mul_left_distributes(self, a, b, c):
        self.assertEqual(mul(a, add(b, c)), add(mul(a, b), mul(a, c)))

    @given(ordinals, ordinals, ordinals)
    @settings(max_examples=200, deadline=None)
    def test_add_strictly_monotone_on_the_right(self, a, b, c):
        if b < c:
            self.assertLess(add(a, b), add(a, c))

    @given(ordinals, ordinals)
    @settings(max_examples=200, deadline=None)
    def test_cmp_equal_means_identical(self, a, b):
        self.assertEqual(cmp(a, b) == Ordering.EQUAL, a.terms == b.terms)
        self.assertEqual(cmp(a, b), -cmp(b, a))

    @given(ordinals)
    @settings(max_examples=200, deadline=None)
    def test_normalize_is_idempotent(self, a):
        rebuilt = Ordinal(a.terms)
        self.assertEqual(rebuilt, a)
        self.assertEqual(Ordinal(rebuilt.terms).terms, rebuilt.terms)


class ExponentiationIdentityTests(SimpleTestCase):

    @given(ordinals)
    @settings(max_examples=200, deadline=None)
    def test_omega_power_is_two_power_of_omega_multiple(self, a):
        self.assertEqual(omega_pow(a), two_pow(mul(W, a)))

    @given(ordinals)
    @settings(max_examples=200, deadline=None)
    def test_two_power_successor_law(self, a):
        self.assertEqual(two_pow(successor(a)), mul(two_pow(a), TWO))

    @given(limit_ordinals, st.integers(min_value=0, max_value=5))
    @settings(max_examples=100, deadline=None)
    def test_two_power_is_continuous(self, limit, k):
        value = two_pow(limit)
        self.assertTrue(is_limit(value))
        target = fund_seq(value, k)
        self.assertIsNotNone(supremum_witness(limit, target, two_pow, search_bound=50))
        self.assertLess(two_pow(fund_seq(limit, k)), value)

    @given(ordinals, ordinals)
    @settings(max_examples=200, deadline=None)
    def test_two_power_supremum_identity(self, a, b):
        if not b < a:
            a, b = b, a
        if not b < a:
            return
        for gamma in (ZERO, decrement_last(two_pow(b))):
            self.assertLess(add(two_pow(b), gamma), two_pow(a))


class FundamentalSequenceTests(SimpleTestCase):

    def test_examples(self):
        self.assertEqual(fund_seq(W, 5), fin(5))
        self.assertEqual(fund_seq(W ** 2, 3), W * 3)
        self.assertEqual(fund_seq(W ** W, 2), W ** 2)
        self.assertEqual(fund_seq(W * 3, 2), W * 2 + 2)

    def test_rejects_non_limits(self):
        with self.assertRaises(OrdinalError):
            fund_seq(W + 1, 0)
        with self.assertRaises(OrdinalError):
            fund_seq(ZERO, 0)

    @given(limit_ordinals)
    @settings(max_examples=100, deadline=None)
    def test_strictly_increasing_below_the_limit(self, limit):
        values = [fund_seq(limit, n) for n in range(8)]
        for lower, upper in zip(values, values[1:]):
            self.assertLess(lower, upper)
        self.assertTrue(all(v < limit for v in values))

    @given(limit_ordinals, ordinals)
    @settings(max_examples=100, deadline=None)
    def test_supremum_is_the_limit(self, limit, b):
        if b < limit:
            self.assertIsNotNone(supremum_witness(limit, b, search_bound=50))


class NormalFunctionTests(SimpleTestCase):

    def test_f_examples(self):
        self.assertEqual(f_eval(ZERO), ONE)
        self.assertEqual(f_eval(W), W)
        self.assertEqual(f_eval(W + 1), W * 2)
        self.assertEqual(f_eval(W + 2), W * 3 + 1)
        self.assertEqual(f_eval(W * 2), W ** 2)
        self.assertEqual(f_eval(W ** 2), W ** 3)
        self.assertEqual(f_eval(W ** W), W ** W)

    def test_f_on_naturals(self):
        self.assertEqual([int(f_eval(fin(n))) for n in range(8)], [1, 2, 4, 7, 11, 16, 22, 29])

    def test_g_examples(self):
        self.assertEqual(g_eval(ZERO), ONE)
        self.assertEqual(g_eval(fin(4)), fin(8))
        self.assertEqual(g_eval(W + 1), W * 2 + 1)
        self.assertEqual(g_eval(W), W)
        self.assertEqual(g_eval(W * 2), W * 3)

    def test_derivative_examples(self):
        self.assertEqual(f_derivative(ZERO), W)
        self.assertEqual(g_derivative(ONE), W ** 2)
        self.assertEqual(g_derivative(W), W ** W)

    def test_sum_below(self):
        self.assertEqual(sum_below(fin(3)), fin(6))
        self.assertEqual(sum_below(W), W)
        self.assertEqual(sum_below(W ** 2 + W), W ** 3 * 2)

    def test_derivative_values_are_fixed_points(self):
        for alpha in (ZERO, ONE, TWO, W, W + 1, W ** 2):
            fp = f_derivative(alpha)
            self.assertEqual(fp, omega_pow(omega_pow(alpha)))
            self.assertEqual(f_eval(fp), fp)
            gp = g_derivative(alpha)
            self.assertEqual(gp, omega_pow(add(ONE, alpha)))
            self.assertEqual(g_eval(gp), gp)

    def test_no_fixed_points_between_consecutive_derivative_values(self):
        samples = sample_ordinals(150, seed=7)
        for alpha in (ZERO, ONE, TWO, W, W + 1, W ** 2):
            low, high = f_derivative(alpha), f_derivative(successor(alpha))
            candidates = [add(low, s) for s in samples if s]
            candidates += [mul(low, s) for s in samples if s > ONE]
            candidates += [omega_pow(add(mul(omega_pow(alpha), fin(c)), s)) for c in (1, 2, 3) for s in samples]
            inside = [x for x in candidates if low < x < high][:100]
            self.assertGreater(len(inside), 20)
            for x in inside:
                self.assertNotEqual(f_eval(x), x, x)

    def test_fixed_points_enumeration(self):
        self.assertEqual(fixed_points('f', W ** (W ** 2), 2), [W, W ** W])
        self.assertEqual(fixed_points('g', W ** 3, 10), [W, W ** 2])
        with self.assertRaises(OrdinalError):
            fixed_points('h', W, 1)

    @given(ordinals)
    @settings(max_examples=500, deadline=None)
    def test_bounds(self, a):
        self.assertLessEqual(f_eval(a), add(ONE, square(a)))
        self.assertLessEqual(g_eval(a), add(ONE, mul(a, TWO)))

    @given(ordinals)
    @settings(max_examples=500, deadline=None)
    def test_fixed_point_characterization(self, a):
        self.assertEqual(f_eval(a) == a, is_mult_principal(a) and is_limit(a))
        self.assertEqual(g_eval(a) == a, is_add_principal(a) and is_limit(a))

    @given(ordinals)
    @settings(max_examples=300, deadline=None)
    def test_successor_clauses(self, a):
        self.assertEqual(f_eval(successor(a)), add(add(f_eval(a), ONE), a))
        self.assertEqual(g_eval(successor(a)), mul(successor(a), TWO))

    @given(ordinals, ordinals)
    @settings(max_examples=300, deadline=None)
    def test_strictly_increasing(self, a, b):
        if a < b:
            self.assertLess(f_eval(a), f_eval(b))
            self.assertLess(g_eval(a), g_eval(b))

    @given(small_ordinals, small_ordinals)
    @settings(max_examples=300, deadline=None)
    def test_product_bound(self, b, c):
        self.assertLessEqual(mul(b, c), f_eval(add(b, c)))

    @given(limit_ordinals, st.integers(min_value=0, max_value=5))
    @settings(max_examples=150, deadline=None)
    def test_limit_continuity(self, limit, k):
        for fn in (f_eval, g_eval):
            value = fn(limit)
            for n in (0, 3, 20):
                self.assertLess(fn(fund_seq(limit, n)), value)
            target = fund_seq(value, k)
            self.assertIsNotNone(supremum_witness(limit, target, fn, search_bound=50), (fn, limit, k))

    @given(ordinals)
    @settings(max_examples=100, deadline=None)
    def test_derivatives_enumerate_fixed_points(self, a):
        self.assertEqual(f_eval(f_derivative(a)), f_derivative(a))
        self.assertEqual(g_eval(g_derivative(a)), g_derivative(a))
        self.assertLess(f_derivative(a), f_derivative(successor(a)))
        self.assertLess(g_derivative(a), g_derivative(successor(a)))


class ExpressionParserTests(SimpleTestCase):

    def test_precedence(self):
        self.assertEqual(parse_ordinal('w^w + w*2 + 3'), W ** W + W * 2 + 3)
        self.assertEqual(parse_ordinal('w^(w+1)'), W ** (W + 1))
        self.assertEqual(parse_ordinal('w^w^2'), W ** (W ** 2))
        self.assertEqual(parse_ordinal('1 + w'), W)
        self.assertEqual(parse_ordinal('ω·2'), W * 2)

    def test_base_two_routes_to_two_pow(self):
        self.assertEqual(parse_ordinal('2^w'), W)
        self.assertEqual(parse_ordinal('2^(w+2)'), W * 4)

    def test_ast_shape(self):
        expr = parse_expr('w + 2 * 3')
        self.assertIsInstance(expr, BinOp)
        self.assertEqual(expr.op, '+')
        self.assertIsInstance(expr.left, Omega)
        self.assertEqual(expr.right, BinOp('*', Literal(2, 4), Literal(3, 8), 6))

    def test_syntax_errors_carry_positions(self):
        with self.assertRaises(ExpressionSyntaxError) as ctx:
            parse_ordinal('w + $')
        self.assertEqual(ctx.exception.position, 4)
        with self.assertRaises(ExpressionSyntaxError) as ctx:
            parse_ordinal('(w + 1')
        self.assertEqual(ctx.exception.position, 6)
        with self.assertRaises(ExpressionSyntaxError):
            parse_ordinal('')

    def test_rejected_literals_and_bases(self):
        with self.assertRaises(ExpressionSyntaxError):
            parse_ordinal(str(2 ** 32 + 1))
        self.assertEqual(parse_ordinal(str(2 ** 32)), fin(2 ** 32))
        with self.assertRaises(ExpressionSyntaxError):
            parse_ordinal('3^w')

    def test_sequences(self):
        self.assertEqual(parse_sequence('w, 3 ,0'), [W, fin(3), ZERO])
        self.assertEqual(parse_sequence(''), [])
        with self.assertRaises(ExpressionSyntaxError) as ctx:
            parse_sequence('w, 3 +')
        self.assertEqual(ctx.exception.position, 6)

    @given(ordinals)
    @settings(max_examples=200, deadline=None)
    def test_print_parse_round_trip(self, a):
        self.assertEqual(parse_ordinal(str(a)), a)

    @given(nonzero_ordinals, nonzero_ordinals)
    @settings(max_examples=100, deadline=None)
    def test_parsed_comparison_agrees(self, a, b):
        self.assertEqual(cmp(parse_ordinal(str(a)), parse_ordinal(str(b))), cmp(a, b))
