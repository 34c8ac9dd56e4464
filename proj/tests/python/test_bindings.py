"""Smoke tests for the riocirc python module."""

import math
import unittest
from fractions import Fraction

import riocirc


class ArrayTests(unittest.TestCase):
    def test_golden_window(self):
        rows = riocirc.build_array("1,5", 7, 7)
        self.assertEqual(rows[6], ["1", "5", "26", "140", "151", "25", "1"])
        self.assertEqual(rows[2][1], "5")

    def test_rational_entries_as_fractions(self):
        rows = riocirc.as_fractions(riocirc.build_array("-1/3,2/3,2/3", 10, 6))
        self.assertEqual(rows[6][3], Fraction(-17, 27))
        self.assertEqual(rows[9][5], Fraction(130, 243))

    def test_column_and_block(self):
        col = riocirc.column("1,5", 3, 10)
        self.assertEqual(col[:7], ["0", "0", "0", "1", "15", "76", "140"])
        self.assertEqual(riocirc.periodic_block("1,5", 3), ["76", "140"])

    def test_improper_polynomial_raises(self):
        with self.assertRaises(ValueError):
            riocirc.build_array("0,1", 4, 4)


class OrbitTests(unittest.TestCase):
    def test_exact_orbit(self):
        self.assertEqual(riocirc.orbit("1,5", 2), ["76", "140"])

    def test_periods_and_orders(self):
        self.assertEqual(riocirc.orbit_period("1/2,-1/2"), 2)
        self.assertEqual(riocirc.matrix_order("-1/3,2/3,2/3"), 6)
        self.assertIsNone(riocirc.matrix_order("1,5"))

    def test_eigenvalues(self):
        lam = riocirc.eigenvalues("1,5")
        self.assertAlmostEqual(lam[0].real, 6.0, places=12)
        self.assertAlmostEqual(lam[1].real, 4.0, places=12)

    def test_closed_form_orbit(self):
        point = riocirc.closed_form_orbit("1,5", 2)
        self.assertAlmostEqual(point[0], 76.0, places=9)
        self.assertAlmostEqual(point[1], 140.0, places=9)

    def test_rotated_orbit(self):
        x, y = riocirc.rotated_orbit("-4/11,6/11", 0)
        self.assertAlmostEqual(x, -(10 / 11) / math.sqrt(2), places=12)
        self.assertAlmostEqual(y, (2 / 11) / math.sqrt(2), places=12)


class ClassifyTests(unittest.TestCase):
    def test_quadratic_table_row(self):
        cls = riocirc.classify("93/100,1/2,-19/50")
        self.assertEqual(cls["zscale"], "21/20")
        self.assertEqual(cls["spirals"], 2)
        self.assertAlmostEqual(cls["cos_theta"], -0.947, delta=2e-3)
        self.assertAlmostEqual(cls["r"], 1.15659, delta=2e-4)

    def test_fixed_point(self):
        cls = riocirc.classify("1/2,1/2")
        self.assertEqual(cls["kind"], "FixedPoint")


class SequenceTests(unittest.TestCase):
    def test_az(self):
        az = riocirc.az_sequences("1,1", 6)
        self.assertEqual(az["A"], ["1", "1", "-1", "2", "-5", "14"])
        self.assertEqual(az["Z"], az["hbar"])

    def test_catalan(self):
        self.assertEqual([riocirc.catalan(n) for n in range(6)], [1, 1, 2, 5, 14, 42])
        self.assertEqual(riocirc.catalan(30), 3814986502092304)

    def test_theorem6(self):
        seq = riocirc.theorem6_check("1", "1", 5)
        self.assertEqual(seq, ["1", "-3", "10", "-35", "126", "-462"])

    def test_head_sums(self):
        sums = riocirc.head_sums("1/2,-1/2", 6)
        self.assertEqual(sums, ["0", "1/4", "-1/4", "1/4", "-1/4", "1/4"])

    def test_rogers(self):
        self.assertGreater(riocirc.verify_rogers("1,5", 7), 0)

    def test_oeis_fixture(self):
        report = riocirc.oeis_check([str(riocirc.catalan(n)) for n in range(10)], "A000108")
        self.assertTrue(report["matched"])

    def test_domain_errors_surface_as_value_error(self):
        with self.assertRaises(ValueError):
            riocirc.verify_theorem1("1,5", 0, 3)
        with self.assertRaises(ValueError):
            riocirc.classify("1,2,3,4")


if __name__ == "__main__":
    unittest.main()
