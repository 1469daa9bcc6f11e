import itertools
import unittest

import numpy as np

from algebra.field import build_ext_field
from algebra.ring_ext import RingElem
from codes.gray import (
    RVector,
    gray_inverse,
    gray_map,
    gray_vec,
    hamming_distance,
    hamming_weight,
    lee_distance,
    lee_weight,
    lee_weight_one_elements,
    lee_weight_vec,
)
from utils.errors import InvalidParameterError


class TestGrayMap(unittest.TestCase):
    def setUp(self):
        self.r = build_ext_field(3, 1)

    def test_examples(self):
        self.assertEqual(gray_map(RingElem.zero(self.r)), (0, 0))
        self.assertEqual(gray_map(RingElem.u(self.r)), (2, 1))
        self.assertEqual(gray_map(RingElem(self.r, 1, 1)), (2, 0))

    def test_rejects_extension_ring(self):
        with self.assertRaises(InvalidParameterError):
            gray_map(RingElem.u(build_ext_field(3, 2)))

    def test_bijective(self):
        for p in (3, 5, 7, 11, 13):
            r = build_ext_field(p, 1)
            images = {gray_map(RingElem(r, a, b)) for a in range(p) for b in range(p)}
            self.assertEqual(len(images), p * p)

    def test_inverse(self):
        for p in (3, 5, 7):
            r = build_ext_field(p, 1)
            for a in range(p):
                for b in range(p):
                    x = RingElem(r, a, b)
                    self.assertEqual(gray_inverse(gray_map(x), p), x)


class TestGrayVec(unittest.TestCase):
    def test_zero_vector(self):
        image = gray_vec(RVector.zeros(3, 5))
        self.assertEqual(image.tolist(), [0] * 10)

    def test_block_order(self):
        r = build_ext_field(3, 1)
        v = RVector.from_elements([RingElem.u(r), RingElem.one(r)])
        self.assertEqual(gray_vec(v).tolist(), [2, 0, 1, 2])

    def test_linear(self):
        rng = np.random.default_rng(7)
        p = 5
        for _ in range(20):
            x = RVector(p, rng.integers(0, p, 6), rng.integers(0, p, 6))
            y = RVector(p, rng.integers(0, p, 6), rng.integers(0, p, 6))
            c = int(rng.integers(1, p))
            self.assertEqual(gray_vec(x + y.scale(c)).tolist(), ((gray_vec(x) + c * gray_vec(y)) % p).tolist())


class TestWeights(unittest.TestCase):
    def test_lee_examples(self):
        r = build_ext_field(3, 1)
        self.assertEqual(lee_weight(RingElem.zero(r)), 0)
        self.assertEqual(lee_weight(RingElem.u(r)), 2)
        self.assertEqual(lee_weight(RingElem.one(r)), 1)

    def test_hamming_examples(self):
        self.assertEqual(hamming_weight([0] * 4), 0)
        self.assertEqual(hamming_weight([1] * 7), 7)
        self.assertEqual(hamming_weight([0, 2, 0, 1]), 2)

    def test_vector_weight_sums_coordinates(self):
        r = build_ext_field(5, 1)
        elements = [RingElem(r, a, b) for a, b in [(0, 1), (2, 3), (4, 0), (0, 0)]]
        self.assertEqual(lee_weight_vec(RVector.from_elements(elements)), sum(lee_weight(x) for x in elements))

    def test_isometry_exhaustive(self):
        p = 3
        for n in (1, 2):
            vectors = [
                RVector(p, [c[0] for c in coords], [c[1] for c in coords])
                for coords in itertools.product(itertools.product(range(p), repeat=2), repeat=n)
            ]
            for x in vectors:
                for y in vectors:
                    self.assertEqual(lee_distance(x, y), hamming_distance(gray_vec(x), gray_vec(y), p))

    def test_isometry_random(self):
        rng = np.random.default_rng(11)
        for p in (5, 7):
            for _ in range(50):
                x = RVector(p, rng.integers(0, p, 8), rng.integers(0, p, 8))
                y = RVector(p, rng.integers(0, p, 8), rng.integers(0, p, 8))
                self.assertEqual(lee_distance(x, y), hamming_distance(gray_vec(x), gray_vec(y), p))

    def test_weight_one_elements(self):
        for p in (3, 5, 7, 11):
            r = build_ext_field(p, 1)
            expected = {RingElem(r, c, 0) for c in range(1, p)}
            expected |= {RingElem(r, c, (-2 * c) % p) for c in range(1, p)}
            self.assertEqual(set(lee_weight_one_elements(p)), expected)


if __name__ == "__main__":
    unittest.main()
