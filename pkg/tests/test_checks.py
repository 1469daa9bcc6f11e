import unittest

import numpy as np

from algebra.field import build_ext_field
from algebra.ring_ext import RingElem
from checks.base_check import BaseCheck
from checks.distribution_check import DistributionCheck
from checks.dual_distance_check import DualDistanceCheck, dual_lee_distance_small, is_dual_word
from checks.minimality_check import MinimalityCheck, minimal_codewords_bruteforce
from checks.structure_check import (
    StructureCheck,
    check_nondegeneracy,
    check_symmetry,
    coordinate_permutation,
)
from codes.gray import lee_weight
from codes.trace_codes import build_trace_code, codebook
from utils.config import RunConfig
from utils.errors import BudgetExceededError, UnsupportedRegimeError


class TestBaseCheck(unittest.TestCase):
    def test_run_is_abstract(self):
        check = BaseCheck("placeholder")
        self.assertEqual(check.name, "placeholder")
        with self.assertRaises(NotImplementedError):
            check.run(None, None)


class TestDistributionCheck(unittest.TestCase):
    def test_match(self):
        result = DistributionCheck().run(build_trace_code(3, 3, "L"), RunConfig(p=3, m=3, workers=2))
        self.assertEqual(result["status"], "success")
        self.assertTrue(result["match"])
        self.assertEqual(result["predicted"], result["empirical"])

    def test_by_class(self):
        config = RunConfig(p=5, m=2, mode="by_class", representatives=5, seed=3)
        result = DistributionCheck().run(build_trace_code(5, 2, "L"), config)
        self.assertTrue(result["match"])

    def test_unsupported(self):
        with self.assertRaises(UnsupportedRegimeError):
            DistributionCheck().run(build_trace_code(3, 4, "L"), RunConfig(p=3, m=4))


class TestDualDistance(unittest.TestCase):
    def test_distance_two_with_witness(self):
        for p, m in [(3, 2), (3, 3), (5, 2), (7, 2)]:
            for variant in ("L", "Lprime"):
                code = build_trace_code(p, m, variant)
                result = dual_lee_distance_small(code)
                self.assertEqual(result.distance, 2, (p, m, variant))
                self.assertTrue(result.weight_one_free)
                positions = [i for i, _ in result.witness]
                coefficients = [c for _, c in result.witness]
                self.assertEqual(len(set(positions)), len(positions))
                self.assertEqual(sum(lee_weight(c) for c in coefficients), 2)
                self.assertTrue(is_dual_word(code, positions, coefficients))

    def test_non_dual_word(self):
        code = build_trace_code(3, 2, "L")
        one = RingElem.one(build_ext_field(3, 1))
        self.assertFalse(is_dual_word(code, [0, 1], [one, one]))
        self.assertFalse(is_dual_word(code, [5], [one]))

    def test_check_asserts_only_for_m_at_least_two(self):
        config = RunConfig()
        result = DualDistanceCheck().run(build_trace_code(3, 3, "L"), config)
        self.assertEqual(result["status"], "success")
        self.assertTrue(result["asserted"])
        small = DualDistanceCheck().run(build_trace_code(3, 1, "L"), config)
        self.assertFalse(small["asserted"])
        self.assertEqual(small["status"], "success")


class TestMinimality(unittest.TestCase):
    def test_all_minimal(self):
        for variant in ("L", "Lprime"):
            result = minimal_codewords_bruteforce(build_trace_code(3, 3, variant), workers=3)
            self.assertTrue(result.all_minimal, variant)
            self.assertEqual(result.checked, 728)
            self.assertEqual(result.counterexamples, [])

    def test_five_weight_has_covered_words(self):
        code = build_trace_code(3, 2, "L")
        result = minimal_codewords_bruteforce(code)
        self.assertFalse(result.all_minimal)
        words = codebook(code)
        big, small = result.counterexamples[0]
        self.assertTrue(np.all(words[big][words[small] != 0] != 0))
        self.assertLess(np.count_nonzero(words[small]), np.count_nonzero(words[big]))

    def test_budget(self):
        with self.assertRaises(BudgetExceededError):
            minimal_codewords_bruteforce(build_trace_code(3, 3, "L"), budget=100)

    def test_check_skips_over_budget(self):
        result = MinimalityCheck().run(build_trace_code(3, 3, "L"), RunConfig(minimality_budget=100))
        self.assertEqual(result["status"], "skipped")
        self.assertIsNone(result["result"])


class TestStructure(unittest.TestCase):
    def test_symmetry_exhaustive(self):
        self.assertTrue(check_symmetry(build_trace_code(3, 2, "L"), exhaustive=True))
        self.assertTrue(check_symmetry(build_trace_code(5, 1, "Lprime"), exhaustive=True))

    def test_symmetry_random(self):
        code = build_trace_code(3, 3, "Lprime")
        self.assertTrue(check_symmetry(code, trials=30, rng=np.random.default_rng(1)))

    def test_permutation_carries_w_to_v(self):
        code = build_trace_code(3, 2, "L")
        perm, _ = coordinate_permutation(code, 7, 3)
        self.assertEqual(int(perm[3]), 7)
        self.assertEqual(sorted(perm.tolist()), list(range(code.n)))

    def test_nondegeneracy(self):
        small = [(p, m) for p in (3, 5, 7, 11, 13, 17, 19, 23) for m in (1, 2, 3) if p**m <= 27]
        self.assertEqual(len(small), 11)
        for p, m in small:
            self.assertTrue(check_nondegeneracy(build_ext_field(p, m)), (p, m))
        self.assertTrue(check_nondegeneracy(build_ext_field(5, 3), trials=20, rng=np.random.default_rng(2)))

    def test_check(self):
        result = StructureCheck().run(build_trace_code(3, 2, "L"), RunConfig(trials=10))
        self.assertEqual(result["status"], "success")
        self.assertTrue(result["symmetry"])
        self.assertTrue(result["nondegeneracy"])


if __name__ == "__main__":
    unittest.main()
