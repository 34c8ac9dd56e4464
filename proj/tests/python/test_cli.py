"""End-to-end CLI tests: output formats and the exit-code contract
(0 pass, 1 violation, 2 usage error, 3 external service unavailable)."""

import json
import os
import subprocess
import tempfile
import unittest

CLI = os.environ["RIOCIRC_CLI"]


def run(*args, env=None):
    merged = dict(os.environ)
    if env:
        merged.update(env)
    return subprocess.run([CLI, *args], capture_output=True, text=True, env=merged)


class ArrayCommand(unittest.TestCase):
    def test_matrix_2_3(self):
        out = run("array", "--poly", "1,5", "--rows", "7", "--cols", "7", "--format", "csv")
        self.assertEqual(out.returncode, 0)
        rows = out.stdout.strip().splitlines()
        self.assertEqual(rows[6], "1,5,26,140,151,25,1")

    def test_matrix_vper(self):
        out = run("array", "--poly", "1/2,-1/2", "--rows", "7", "--cols", "7", "--format", "csv")
        self.assertEqual(out.stdout.strip().splitlines()[6], "1,-1/2,1/2,-1/2,7/16,-5/32,1/64")

    def test_matrix_actual_rap(self):
        out = run("array", "--poly", "-1/3,2/3,2/3", "--rows", "10", "--cols", "6",
                  "--format", "csv")
        rows = out.stdout.strip().splitlines()
        self.assertEqual(rows[6].split(",")[3], "-17/27")
        self.assertEqual(rows[9].split(",")[5], "130/243")

    def test_json_round_trip_is_byte_identical(self):
        out = run("array", "--poly", "1,5", "--rows", "5", "--cols", "5", "--format", "json")
        parsed = json.loads(out.stdout)
        self.assertEqual(parsed["p"], "1,5")
        again = run("array", "--poly", "1,5", "--rows", "5", "--cols", "5", "--format", "json")
        self.assertEqual(out.stdout, again.stdout)

    def test_out_file(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "arr.csv")
            out = run("array", "--poly", "1,5", "--rows", "3", "--cols", "3",
                      "--format", "csv", "--out", path)
            self.assertEqual(out.returncode, 0)
            with open(path) as handle:
                self.assertEqual(handle.read().splitlines()[2], "1,5,1")


class OrbitCommand(unittest.TestCase):
    def test_exact_orbit_rows(self):
        out = run("orbit", "--poly", "1,5", "--nmax", "2", "--format", "csv")
        lines = out.stdout.strip().splitlines()
        self.assertEqual(lines[0], "n,x,y")
        self.assertEqual(lines[1:], ["0,1,5", "1,10,26", "2,76,140"])

    def test_rotated_with_curve(self):
        out = run("orbit", "--poly", "-4/11,6/11", "--rotated", "--curve", "--nmax", "10",
                  "--format", "csv")
        self.assertEqual(out.returncode, 0)
        self.assertIn("t,x,y,branch", out.stdout)

    def test_decimal_coefficients_rejected(self):
        out = run("orbit", "--poly", "0.93,0.5,-0.38", "--nmax", "2")
        self.assertEqual(out.returncode, 2)

    def test_rotated_needs_low_degree(self):
        out = run("orbit", "--poly", "1,1,1,1", "--rotated", "--nmax", "2")
        self.assertEqual(out.returncode, 2)


class ClassifyCommand(unittest.TestCase):
    def test_table_row(self):
        out = run("classify", "--poly", "93/100,1/2,-19/50", "--format", "json")
        data = json.loads(out.stdout)
        self.assertEqual(data["zscale"], "21/20")
        self.assertEqual(data["spirals"], 2)
        self.assertAlmostEqual(data["cos_theta"], -0.947, delta=2e-3)
        self.assertAlmostEqual(data["r"], 1.15659, delta=2e-4)

    def test_second_row_single_spiral(self):
        data = json.loads(run("classify", "--poly", "-1/2,2/5,89/100", "--format", "json").stdout)
        self.assertEqual(data["zscale"], "79/100")
        self.assertEqual(data["spirals"], 1)
        self.assertAlmostEqual(data["r"], 1.2211, delta=2e-4)

    def test_fixed_point(self):
        data = json.loads(run("classify", "--poly", "1/2,1/2", "--format", "json").stdout)
        self.assertEqual(data["kind"], "FixedPoint")


class AzCommand(unittest.TestCase):
    def test_catalan_signs(self):
        data = json.loads(run("az", "--poly", "1,1", "--order", "6", "--format", "json").stdout)
        self.assertEqual(data["A"], ["1", "1", "-1", "2", "-5", "14"])

    def test_constant(self):
        data = json.loads(run("az", "--poly", "7", "--order", "5", "--format", "json").stdout)
        self.assertEqual(data["Z"], ["1", "0", "0", "0", "0"])
        self.assertEqual(data["A"][0], "7")

    def test_csum_table(self):
        out = run("az", "--csum", "--order", "8", "--kmax", "4", "--format", "csv")
        self.assertEqual(out.returncode, 0)
        lines = out.stdout.strip().splitlines()
        self.assertEqual(lines[0], "t^n,c^0,c^1,c^2,c^3")
        self.assertEqual(lines[7], "6,-42,126,-84,7")
        self.assertEqual(lines[8], "7,132,-462,420,-84")


class VerifyCommand(unittest.TestCase):
    def test_prop5_passes(self):
        out = run("verify", "prop5", "--poly", "-1/3,2/3,2/3", "--nmax", "3")
        self.assertEqual(out.returncode, 0)
        self.assertTrue(json.loads(out.stdout)["verified"])

    def test_theorem6_passes(self):
        out = run("verify", "theorem6", "--poly", "1,1", "--nmax", "8")
        self.assertEqual(out.returncode, 0)

    def test_improper_polynomial_is_usage_error(self):
        out = run("verify", "theorem1", "--poly", "0,1")
        self.assertEqual(out.returncode, 2)

    def test_unknown_subcommand_usage(self):
        out = run("frobnicate")
        self.assertEqual(out.returncode, 2)

    def test_theorem2_passes(self):
        out = run("verify", "theorem2", "--poly", "1,5", "--nmax", "5")
        self.assertEqual(out.returncode, 0)


class OeisCommand(unittest.TestCase):
    def test_theorem6_match(self):
        out = run("oeis", "--id", "A001700", "--from", "theorem6", "--a", "1", "--b", "1",
                  "--nmax", "5", env={"OEIS_OFFLINE": "1"})
        self.assertEqual(out.returncode, 0)
        report = json.loads(out.stdout)
        self.assertTrue(report["matched"])

    def test_mismatch_is_exit_1(self):
        out = run("oeis", "--id", "A000108", "--from", "terms", "--terms", "1,1,2,5,15",
                  env={"OEIS_OFFLINE": "1"})
        self.assertEqual(out.returncode, 1)

    def test_missing_fixture_offline_is_exit_3(self):
        out = run("oeis", "--id", "A999999", "--from", "terms", "--terms", "1,2,3",
                  env={"OEIS_OFFLINE": "1"})
        self.assertEqual(out.returncode, 3)


if __name__ == "__main__":
    unittest.main()
