import contextlib
import io
import json
import os
import tempfile
import unittest

from main import main
from utils.export import SWEEP_COLUMNS


def run(argv):
    """Run the command line, returning (exit code, stdout, stderr)."""
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        code = main(argv)
    return code, out.getvalue(), err.getvalue()


class TestConstruct(unittest.TestCase):
    def test_writes_matrix(self):
        with tempfile.TemporaryDirectory() as tmp:
            code, stdout, _ = run(["construct", "-p", "3", "-m", "1", "--variant", "Lprime", "--out", tmp])
            self.assertEqual(code, 0)
            self.assertEqual(stdout.strip(), "[8, 2]")
            with open(os.path.join(tmp, "gmatrix_p3_m1_Lprime.csv"), encoding="utf-8") as f:
                lines = f.read().splitlines()
            self.assertEqual(len(lines), 2)
            for line in lines:
                values = [int(v) for v in line.split(",")]
                self.assertEqual(len(values), 8)
                self.assertTrue(all(0 <= v < 3 for v in values))

    def test_csv_path(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "g.csv")
            code, stdout, _ = run(["construct", "-p", "3", "-m", "2", "--out", path])
            self.assertEqual(code, 0)
            self.assertEqual(stdout.strip(), "[64, 4]")
            self.assertTrue(os.path.exists(path))


class TestExitCodes(unittest.TestCase):
    def test_invalid_prime(self):
        code, _, stderr = run(["construct", "-p", "2", "-m", "1"])
        self.assertEqual(code, 2)
        self.assertIn("error:", stderr)

    def test_unsupported_regime(self):
        code, _, _ = run(["verify", "-p", "3", "-m", "4"])
        self.assertEqual(code, 4)

    def test_budget(self):
        code, _, _ = run(["verify", "-p", "3", "-m", "3", "--budget", "10"])
        self.assertEqual(code, 3)


class TestVerify(unittest.TestCase):
    def test_json_report(self):
        code, stdout, _ = run(["verify", "-p", "3", "-m", "3"])
        self.assertEqual(code, 0)
        data = json.loads(stdout)
        self.assertEqual(data["empirical"], [[0, 1], [450, 676], [468, 52]])
        self.assertEqual(data["griesmer"], {"sum_d": 675, "sum_d1": 678, "optimal": True})
        self.assertEqual(data["sss"]["participants"], 675)

    def test_csv_report(self):
        code, stdout, _ = run(["verify", "-p", "7", "-m", "1", "--format", "csv"])
        self.assertEqual(code, 0)
        header, row = stdout.strip().splitlines()
        self.assertEqual(header.split(","), SWEEP_COLUMNS)
        self.assertTrue(row.startswith("7,1,L,two_weight_L,36,2,30,True"))

    def test_text_report(self):
        code, stdout, _ = run(["verify", "-p", "3", "-m", "2", "--format", "text"])
        self.assertEqual(code, 0)
        self.assertIn("five_weight", stdout)
        self.assertIn("PASS", stdout)

    def test_identical_across_workers(self):
        with tempfile.TemporaryDirectory() as tmp:
            outputs = []
            for workers in ("1", "3"):
                path = os.path.join(tmp, f"report_{workers}.json")
                code, _, _ = run(["verify", "-p", "3", "-m", "3", "--variant", "Lprime", "--workers", workers, "--out", path])
                self.assertEqual(code, 0)
                with open(path, "rb") as f:
                    outputs.append(f.read())
            self.assertEqual(outputs[0], outputs[1])


class TestGauss(unittest.TestCase):
    def test_json(self):
        code, stdout, _ = run(["gauss", "-p", "5", "-m", "2", "--format", "json"])
        self.assertEqual(code, 0)
        data = json.loads(stdout)
        self.assertEqual(len(data["rows"]), 4)
        self.assertAlmostEqual(data["rows"][0]["closed"][0], -5)
        self.assertTrue(all(row["pass"] for row in data["rows"]))

    def test_text(self):
        code, stdout, _ = run(["gauss", "-p", "3", "-m", "3"])
        self.assertEqual(code, 0)
        self.assertIn("G(eta)", stdout)


class TestSweep(unittest.TestCase):
    def test_empty(self):
        code, stdout, _ = run(["sweep"])
        self.assertEqual(code, 0)
        self.assertEqual(stdout.strip(), ",".join(SWEEP_COLUMNS))

    def test_grid(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "sweep.csv")
            code, _, _ = run(["sweep", "--primes", "3", "--degrees", "1", "2", "--variants", "L", "Lprime", "--out", path])
            self.assertEqual(code, 0)
            with open(path, encoding="utf-8") as f:
                lines = f.read().splitlines()
            self.assertEqual(len(lines), 5)

    def test_failure_exit(self):
        code, stdout, _ = run(["sweep", "--primes", "3", "--degrees", "4"])
        self.assertEqual(code, 1)
        self.assertEqual(len(stdout.strip().splitlines()), 2)


if __name__ == "__main__":
    unittest.main()
