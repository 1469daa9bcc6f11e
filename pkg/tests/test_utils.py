import os
import tempfile
import unittest
from types import SimpleNamespace

import numpy as np

from utils.config import RunConfig
from utils.errors import (
    BudgetExceededError,
    ClassNonConstancyError,
    FieldMismatchError,
    InvalidParameterError,
    TraceCodeError,
    UnsupportedRegimeError,
)
from utils.export import matrix_filename, write_generator_matrix, write_text
from utils.parallel import map_ranges, partition


class TestErrors(unittest.TestCase):
    def test_exit_codes(self):
        self.assertEqual(ClassNonConstancyError("x").exit_code, 1)
        self.assertEqual(FieldMismatchError("x").exit_code, 2)
        self.assertEqual(BudgetExceededError("x").exit_code, 3)
        self.assertEqual(UnsupportedRegimeError("x").exit_code, 4)

    def test_invalid_parameter_is_value_error(self):
        self.assertTrue(issubclass(InvalidParameterError, ValueError))
        self.assertTrue(issubclass(InvalidParameterError, TraceCodeError))


class TestRunConfig(unittest.TestCase):
    def test_defaults_validate(self):
        config = RunConfig().validate()
        self.assertEqual((config.p, config.m, config.variant, config.mode), (3, 1, "L", "full"))
        self.assertGreaterEqual(config.workers, 1)

    def test_rejects(self):
        for overrides in ({"p": 9}, {"m": 0}, {"variant": "M"}, {"mode": "sample"}, {"workers": 0}, {"format": "xml"}):
            with self.assertRaises(InvalidParameterError, msg=str(overrides)):
                RunConfig(**overrides).validate()

    def test_from_args_keeps_defaults(self):
        args = SimpleNamespace(p=5, m=2, variant="Lprime", workers=None, command="verify")
        config = RunConfig.from_args(args)
        self.assertEqual((config.p, config.m, config.variant), (5, 2, "Lprime"))
        self.assertEqual(config.seed, 0)
        self.assertGreaterEqual(config.workers, 1)


class TestExport(unittest.TestCase):
    def test_matrix_file(self):
        matrix = np.array([[0, 1, 2], [2, 2, 0]])
        with tempfile.TemporaryDirectory() as tmp:
            path = write_generator_matrix(matrix, 3, 1, "L", os.path.join(tmp, "nested"))
            self.assertEqual(os.path.basename(path), matrix_filename(3, 1, "L"))
            with open(path, encoding="utf-8") as f:
                self.assertEqual(f.read().splitlines(), ["0,1,2", "2,2,0"])

    def test_write_text_adds_newline(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = write_text("abc", os.path.join(tmp, "out.txt"))
            with open(path, encoding="utf-8") as f:
                self.assertEqual(f.read(), "abc\n")


class TestParallel(unittest.TestCase):
    def test_partition_covers_range(self):
        for total, parts in [(10, 3), (3, 8), (1, 1), (100, 7)]:
            chunks = partition(total, parts)
            self.assertEqual(chunks[0][0], 0)
            self.assertEqual(chunks[-1][1], total)
            for (_, stop), (start, _) in zip(chunks, chunks[1:]):
                self.assertEqual(stop, start)
        self.assertEqual(partition(0, 4), [])

    def test_map_ranges_in_order(self):
        for workers in (1, 4):
            parts = map_ranges(lambda a, b: list(range(a, b)), 25, workers)
            self.assertEqual([x for part in parts for x in part], list(range(25)))


if __name__ == "__main__":
    unittest.main()
