import unittest

import numpy as np

from algebra.field import build_ext_field
from algebra.ring_ext import (
    RingElem,
    count_units,
    crt_join,
    crt_split,
    frobenius,
    is_unit,
    ring_elements,
    ring_ops,
    ring_trace,
    ring_units,
    trace_by_frobenius,
)
from utils.errors import FieldMismatchError


def random_elements(field, count, seed):
    rng = np.random.default_rng(seed)
    return [RingElem(field, int(a), int(b)) for a, b in rng.integers(0, field.q, size=(count, 2))]


class TestRingOps(unittest.TestCase):
    def setUp(self):
        self.f = build_ext_field(3, 1)
        self.u = RingElem.u(self.f)
        self.one = RingElem.one(self.f)

    def test_u_is_idempotent(self):
        self.assertEqual(self.u * self.u, self.u)

    def test_one_minus_two_u_squares_to_one(self):
        x = self.one - self.u.scale(2)
        self.assertEqual(x * x, self.one)

    def test_zero_annihilates(self):
        zero = RingElem.zero(self.f)
        for x in ring_elements(self.f):
            self.assertEqual(x * zero, zero)

    def test_multiplication_is_componentwise_in_crt(self):
        f = build_ext_field(3, 2)
        for x, y in zip(random_elements(f, 30, 1), random_elements(f, 30, 2)):
            xs, xt = crt_split(x)
            ys, yt = crt_split(y)
            self.assertEqual(crt_split(x * y), (xs * ys, xt * yt))
            self.assertEqual(crt_split(x + y), (xs + ys, xt + yt))

    def test_ring_ops(self):
        x = RingElem(self.f, 1, 2)
        y = RingElem(self.f, 2, 2)
        total, difference, negated, product = ring_ops(x, y)
        self.assertEqual(total, RingElem(self.f, 0, 1))
        self.assertEqual(difference, RingElem(self.f, 2, 0))
        self.assertEqual(negated, RingElem(self.f, 2, 1))
        self.assertEqual(product, RingElem(self.f, 2, 1))

    def test_mixed_fields(self):
        other = RingElem.one(build_ext_field(3, 2))
        with self.assertRaises(FieldMismatchError):
            self.one + other
        with self.assertRaises(FieldMismatchError):
            self.one * RingElem.one(build_ext_field(5, 1))


class TestCrt(unittest.TestCase):
    def test_examples(self):
        f = build_ext_field(3, 1)
        self.assertEqual(tuple(int(c) for c in crt_split(RingElem.u(f))), (0, 1))
        one_minus_two_u = RingElem(f, 1, 1)  # 1 - 2u with -2 = 1 mod 3
        self.assertEqual(tuple(int(c) for c in crt_split(one_minus_two_u)), (1, 2))

    def test_join_is_ut_plus_one_minus_u_tprime(self):
        f = build_ext_field(3, 2)
        u = RingElem.u(f)
        one = RingElem.one(f)
        for t_prime, t in [(1, 4), (5, 0), (0, 7), (8, 8)]:
            expected = u * RingElem(f, t, 0) + (one - u) * RingElem(f, t_prime, 0)
            self.assertEqual(crt_join(t_prime, t, f), expected)

    def test_round_trip(self):
        f = build_ext_field(3, 2)
        for x in ring_elements(f):
            self.assertEqual(crt_join(*crt_split(x)), x)
        for s in f.elements():
            for t in f.elements():
                self.assertEqual(crt_split(crt_join(s, t)), (s, t))

    def test_join_rejects_mixed_fields(self):
        with self.assertRaises(FieldMismatchError):
            crt_join(build_ext_field(3, 1).one(), build_ext_field(3, 2).one())


class TestUnits(unittest.TestCase):
    def test_examples(self):
        f = build_ext_field(3, 1)
        self.assertFalse(is_unit(RingElem.u(f)))
        self.assertTrue(is_unit(RingElem(f, 1, 1)))
        self.assertEqual(count_units(f), 4)

    def test_unit_group_order(self):
        for p, m in [(3, 2), (5, 1), (7, 1)]:
            f = build_ext_field(p, m)
            self.assertEqual(count_units(f), (f.q - 1) ** 2)
            units = ring_units(f)
            self.assertEqual(len(set(units)), (f.q - 1) ** 2)
            self.assertTrue(all(is_unit(x) for x in units))


class TestFrobenius(unittest.TestCase):
    def test_fixes_u(self):
        f = build_ext_field(5, 3)
        self.assertEqual(frobenius(RingElem.u(f)), RingElem.u(f))

    def test_order_divides_m(self):
        for p, m in [(3, 3), (5, 2), (3, 4)]:
            f = build_ext_field(p, m)
            for x in random_elements(f, 100, 3):
                y = x
                for _ in range(m):
                    y = frobenius(y)
                self.assertEqual(y, x)

    def test_homomorphism(self):
        f = build_ext_field(3, 3)
        for x, y in zip(random_elements(f, 50, 4), random_elements(f, 50, 5)):
            self.assertEqual(frobenius(x * y), frobenius(x) * frobenius(y))
            self.assertEqual(frobenius(x + y), frobenius(x) + frobenius(y))


class TestRingTrace(unittest.TestCase):
    def test_examples(self):
        f9 = build_ext_field(3, 2)
        base = f9.base_field
        self.assertEqual(ring_trace(RingElem.zero(f9)), RingElem.zero(base))
        self.assertEqual(ring_trace(RingElem.u(f9)), RingElem(base, 0, 2))
        self.assertEqual(ring_trace(RingElem(f9, [1, 0], 1)), RingElem(base, 0, 2))

    def test_agrees_with_frobenius_sum(self):
        for p, m in [(3, 2), (3, 3), (5, 2)]:
            f = build_ext_field(p, m)
            for x in ring_elements(f):
                closed = ring_trace(x)
                literal = trace_by_frobenius(x)
                self.assertEqual((int(closed.a), int(closed.b)), (int(literal.a), int(literal.b)))

    def test_lands_in_base_ring(self):
        f = build_ext_field(3, 4)
        for x in random_elements(f, 100, 6):
            literal = trace_by_frobenius(x)
            self.assertLess(int(literal.a), 3)
            self.assertLess(int(literal.b), 3)


if __name__ == "__main__":
    unittest.main()
