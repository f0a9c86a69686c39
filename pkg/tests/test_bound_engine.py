# -*- coding: utf-8 -*-
#   Copyright (C) 2024-2026 pyhermitcodes developers
#   This file is part of pyhermitcodes

#    pyhermitcodes is free software: you can redistribute it and/or modify
#    it under the terms of the GNU General Public License as published by
#    the Free Software Foundation, either version 3 of the License, or
#    (at your option) any later version.

#    pyhermitcodes is distributed in the hope that it will be useful,
#    but WITHOUT ANY WARRANTY; without even the implied warranty of
#    MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
#    GNU General Public License for more details.

#    You should have received a copy of the GNU General Public License
#    along with pyhermitcodes.  If not, see <http://www.gnu.org/licenses/>.

import unittest
from pyhermitcodes.hermitian_curve import curve_params, CanonicalForm, TwoPointDivisor
from pyhermitcodes.bound_engine import (base_coset_bound, sequence_bound_simple, sequence_bound_improved,
                                        coset_bound_sequence, redundancy, sequence_redundancy, classical_cutoff,
                                        redundancy_diff_closed_form, actual_distance_twopoint, best_twopoint,
                                        order_bound_twopoint, best_classical_twopoint_redundancy, redundancy_table,
                                        strict_improvement_stats, goodfamily_check, WindowTooSmallError,
                                        order_bound_onepoint, predicted_distance, DistancePrediction, NoDistanceCaseError)

STEPS = list(range(-1, 23))
G_ONEPOINT = [1, 0, 0, 0, 2, 2, 0, 0, 3, 4, 3, 0, 4, 6, 6, 4, 5, 8, 9, 8, 9, 10, 12, 12]
G_TWOPOINT = [1, 0, 0, 0, 2, 2, 0, 0, 3, 4, 3, 1, 4, 6, 6, 5, 6, 8, 9, 9, 10, 11, 12, 13]
G_IMPROVED = [1, 0, 0, 0, 2, 2, 0, 0, 3, 4, 3, 4, 4, 6, 6, 7, 8, 8, 9, 10, 11, 12, 12, 13]

F16 = [(3, 3, 3, 3, 3), (4, 6, 5, 6, 5), (5, 10, 8, 8, 8), (6, 11, 9, 8, 8), (7, 11, 11, 10, 10),
       (8, 11, 11, 11, 11), (9, 14, 13, 13, 13), (10, 15, 15, 14, 14), (11, 16, 16, 15, 15)]
F64 = [(5, 10, 8, 10, 8, 0), (7, 21, 14, 21, 14, 0), (9, 36, 20, 30, 20, 0), (11, 37, 24, 30, 23, 1),
       (13, 37, 28, 30, 27, 1), (15, 37, 30, 36, 29, 1), (17, 44, 35, 39, 35, 0), (19, 46, 39, 39, 37, 2),
       (21, 46, 41, 39, 39, 0), (23, 46, 43, 45, 42, 1), (25, 52, 47, 48, 47, 0), (27, 54, 50, 48, 48, 0),
       (29, 55, 53, 52, 50, 2), (31, 55, 55, 54, 54, 0)]


class TestCosetBounds(unittest.TestCase):

    def test_tables_q4(self):
        self.assertEqual([sequence_bound_simple(i, "onepoint", 4) for i in STEPS], G_ONEPOINT)
        self.assertEqual([sequence_bound_simple(i, "twopoint", 4) for i in STEPS], G_TWOPOINT)
        self.assertEqual([sequence_bound_improved(i, 4) for i in STEPS], G_IMPROVED)

    def test_sequence_object(self):
        seq = coset_bound_sequence(4, "twopoint", "improved", 22)
        self.assertEqual(seq.i_max, 22)
        self.assertEqual([b for i, b in seq.items()], G_IMPROVED)
        self.assertEqual(coset_bound_sequence(4, "onepoint", "simple", -1).items(), [(-1, 1)])
        self.assertEqual(seq.to_dict()["bounds"]["10"], 4)

    def test_base_bound(self):
        self.assertEqual(base_coset_bound(CanonicalForm(1, 0, 4), "P", 4), 1)
        self.assertEqual(base_coset_bound(CanonicalForm(1, 0, 4), "Q", 4), 4)
        self.assertEqual(base_coset_bound(CanonicalForm(0, 4, 4), "P", 4), 0)
        with self.assertRaises(ValueError):
            base_coset_bound(CanonicalForm(1, 0, 4), "R", 4)

    def test_goppa_tail(self):
        #once d >= q the bounds are the Goppa bound i - (2g - 2)
        for q in (3, 4, 5):
            p = curve_params(q)
            start = (q + 1) * (2 * q - 1)
            for i in range(start, start + 3 * q):
                self.assertEqual(sequence_bound_simple(i, "onepoint", q), i - (2 * p.genus - 2))

    def test_improved_dominates_simple(self):
        for q in (2, 3, 4, 5, 7, 8, 9, 16):
            for i in range(-1, 2 * q * q):
                self.assertGreaterEqual(sequence_bound_improved(i, q), sequence_bound_simple(i, "twopoint", q))


class TestRedundancy(unittest.TestCase):

    def test_improved_onepoint(self):
        self.assertEqual(redundancy(5, coset_bound_sequence(4, "onepoint", i_max=50), "improved"), 8)

    def test_short_horizon(self):
        with self.assertRaises(WindowTooSmallError):
            redundancy(5, coset_bound_sequence(4, "onepoint", i_max=20), "improved")

    def test_bad_arguments(self):
        seq = coset_bound_sequence(4, "onepoint", i_max=50)
        with self.assertRaises(ValueError):
            redundancy(1, seq)
        with self.assertRaises(ValueError):
            redundancy(5, seq, "other")

    def test_cutoff(self):
        seq = coset_bound_sequence(4, "onepoint", i_max=50)
        self.assertEqual(classical_cutoff(5, seq), 15)
        self.assertEqual(redundancy(5, seq, "classical"), 10)

    def test_table_q4(self):
        table = redundancy_table(4, range(3, 12))
        for delta, c1, i1, c2, i2 in F16:
            row = table[delta]
            self.assertEqual((row.onepoint_classical, row.onepoint_improved, row.twopoint_classical,
                              row.twopoint_improved, row.diff), (c1, i1, c2, i2, 0))

    def test_table_q8(self):
        table = redundancy_table(8, range(5, 32, 2))
        self.assertEqual([tuple(row) for row in table], F64)

    def test_trivial_distance(self):
        row = redundancy_table(2, [2])[2]
        self.assertEqual(tuple(row), (2, 1, 1, 1, 1, 0))

    def test_closed_form_difference(self):
        for q in (2, 3, 4, 5, 7, 8, 9):
            for delta in range(q + 1, q * q + 1):
                direct = (sequence_redundancy(delta, q, "onepoint", "improved", "simple") -
                          sequence_redundancy(delta, q, "twopoint", "improved", "improved"))
                self.assertEqual(redundancy_diff_closed_form(delta, q), direct, (q, delta))

    def test_monotone_in_delta(self):
        for q in (2, 3, 4, 8):
            for kind, method in (("onepoint", "simple"), ("twopoint", "simple"), ("twopoint", "improved")):
                for mode in ("classical", "improved"):
                    r = [sequence_redundancy(delta, q, kind, mode, method) for delta in range(2, q * q + 2)]
                    self.assertEqual(r, sorted(r), (q, kind, method, mode))

    def test_closed_form_range(self):
        with self.assertRaises(ValueError):
            redundancy_diff_closed_form(3, 4)


class TestDistances(unittest.TestCase):

    def test_introduction_codes(self):
        self.assertEqual(actual_distance_twopoint(CanonicalForm(1, 0, 0), "R-P", 4), 5)
        self.assertEqual(actual_distance_twopoint(CanonicalForm(2, 1, 4), "R-P-Q", 4), 7)
        self.assertEqual(actual_distance_twopoint(CanonicalForm(2, 2, 4), "R-P-Q", 4), 6)

    def test_no_case(self):
        with self.assertRaises(NoDistanceCaseError):
            actual_distance_twopoint(CanonicalForm(2, 0, 4), "R-P", 4)
        with self.assertRaises(ValueError):
            actual_distance_twopoint(CanonicalForm(0, 0, 0), "R-P", 4)

    def test_best_twopoint(self):
        best = best_twopoint(58, 4)
        self.assertEqual(best.distance, 7)
        self.assertEqual(best.form.b, 4)
        self.assertEqual(best.evaluation["divisor"], TwoPointDivisor(60, -2))
        with self.assertRaises(ValueError):
            best_twopoint(64, 4)

    def test_order_bound_at_least_goppa(self):
        p = curve_params(3)
        for t in range(-1, 30):
            for r in range(4):
                self.assertGreaterEqual(order_bound_twopoint((t - r, r), 3), t - (2 * p.genus - 2))

    def test_onepoint_order_bound(self):
        self.assertEqual(order_bound_onepoint(0, 2), 2)
        self.assertEqual(order_bound_onepoint(8, 2), 8)
        self.assertEqual(order_bound_onepoint(-5, 4), 1)
        p = curve_params(4)
        for m in range(-1, 40):
            self.assertGreaterEqual(order_bound_onepoint(m, 4), m - (2 * p.genus - 2))

    def test_predicted_distance(self):
        #C(1) at q = 2 is the repetition code once the base point P is dropped
        self.assertEqual(predicted_distance((1, 0), "R-P", 2), DistancePrediction(8, True))
        self.assertEqual(predicted_distance((3, -2), "R-P-Q", 2), DistancePrediction(7, True))
        self.assertEqual(predicted_distance((8, 0), "R-P", 2), DistancePrediction(2, False))
        self.assertEqual(predicted_distance((9, 0), "R-P", 2), DistancePrediction(1, True))
        self.assertIsNone(predicted_distance((2, -2), "R-P-Q", 2))
        self.assertEqual(predicted_distance((59, 0), "R-P", 4), DistancePrediction(5, True))
        self.assertEqual(predicted_distance((60, -2), "R-P-Q", 4), DistancePrediction(7, True))
        with self.assertRaises(ValueError):
            predicted_distance((5, 1), "R-P", 2)

    def test_best_classical(self):
        self.assertEqual(best_classical_twopoint_redundancy(5, 4), 8)
        with self.assertRaises(ValueError):
            best_classical_twopoint_redundancy(64, 4)


class TestImprovementStats(unittest.TestCase):

    def test_family(self):
        for q in (4, 8, 16):
            fam = goodfamily_check(q)
            self.assertEqual(fam.delta, q * (q + 1) // 2)
            self.assertEqual(fam.onepoint_gain, q // 2 - 1)
            self.assertGreaterEqual(fam.classical_gain, fam.alpha_gain)
        with self.assertRaises(ValueError):
            goodfamily_check(3)

    def test_stats(self):
        stats = strict_improvement_stats(4)
        self.assertEqual(stats.deltas, list(range(5, 17)))
        self.assertTrue(set(stats.improving) <= set(stats.deltas))
        self.assertAlmostEqual(stats.ratio, len(stats.improving) / 12.0)
        with self.assertRaises(ValueError):
            strict_improvement_stats(3)

    def test_stats_q8(self):
        stats = strict_improvement_stats(8)
        self.assertEqual(stats.deltas, list(range(9, 65)))
        self.assertIn(19, stats.improving)
        for row in F64:
            if row[0] > 8:
                self.assertEqual(row[0] in stats.improving, row[5] > 0, row)
        self.assertGreaterEqual(stats.ratio, stats.ratio_bound)
        self.assertEqual(stats.interval, (8, 18))

    def test_stats_q16(self):
        stats = strict_improvement_stats(16)
        self.assertEqual(stats.deltas, list(range(17, 257)))
        self.assertTrue(stats.improving)
        self.assertTrue(set(stats.improving) <= set(stats.deltas))
        self.assertAlmostEqual(stats.ratio, len(stats.improving) / 240.0)
        self.assertGreaterEqual(stats.ratio, stats.ratio_bound)
        for delta in stats.improving:
            self.assertLess(sequence_redundancy(delta, 16, "twopoint", "improved", "improved"),
                            sequence_redundancy(delta, 16, "onepoint", "improved", "simple"))


if __name__ == '__main__':
    unittest.main()
