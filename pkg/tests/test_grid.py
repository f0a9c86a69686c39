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
from pyhermitcodes.hermitian_curve import curve_params
from pyhermitcodes.bound_engine import (edge_label, grid_labels, propagate_grid, search_sequences,
                                        sequence_bound_improved, sequence_bound_simple, sequence_redundancy,
                                        WindowTooSmallError)
from pyhermitcodes.code_builder import code_from_divisor, residue_dual
from pyhermitcodes.oracle import coset_min_weight


class TestEdgeLabels(unittest.TestCase):

    def test_labels_around_10P(self):
        self.assertEqual([edge_label((10, n), "P", 4) for n in range(1, 5)], [1, 2, 3, 4])
        self.assertEqual([edge_label((10, n), "Q", 4) for n in range(1, 4)], [4, 6, 6])

    def test_gaps(self):
        #L(Q) = L(P + Q) on a curve of positive genus
        self.assertEqual(edge_label((0, 1), "P", 4), 0)

    def test_window(self):
        grid = grid_labels(4, (8, 12), (1, 4))
        self.assertEqual(grid.shape, (5, 4))
        self.assertEqual(grid.label((10, 2), "P"), 2)
        with self.assertRaises(WindowTooSmallError):
            grid.label((12, 1), "P")
        with self.assertRaises(WindowTooSmallError):
            grid_labels(4, (3, 2), (0, 1))


class TestPropagation(unittest.TestCase):

    def test_base_row_is_simple_bound(self):
        q = 4
        grid = grid_labels(q, (-1, 30), (1, q))
        for i in range(-1, 29):
            label = grid.label((i, 1), "P")
            if label:
                self.assertEqual(label, max(sequence_bound_simple(i, "twopoint", q), 1))

    def test_fixpoint_is_improved_bound(self):
        for q in (3, 4, 5, 7, 8, 9, 16):
            params = curve_params(q)
            last = 2 * params.deg_K + 2 * q + 2
            base = grid_labels(params, (-1, last + 1), (1, q))
            prop = propagate_grid(base, params, reach=(1, q))
            for i in range(-1, last):
                self.assertEqual(prop.label((i, 1), "P"), sequence_bound_improved(i, params), (q, i))

    def test_fixpoint_q2_matches_coset_weights(self):
        #at q = 2 the fixpoint can beat the closed form, never the true weight
        params = curve_params(2)
        last = 2 * params.deg_K + 2 * 2 + 2
        base = grid_labels(params, (-1, last + 1), (1, 2))
        prop = propagate_grid(base, params, reach=(1, 2))
        for i in range(-1, last):
            label = prop.label((i, 1), "P")
            self.assertGreaterEqual(label, sequence_bound_improved(i, params), i)
            sup = residue_dual(code_from_divisor((i, 1), "R-P-Q", params))
            sub = residue_dual(code_from_divisor((i + 1, 1), "R-P-Q", params))
            w = coset_min_weight(sub, sup)
            if w:
                self.assertLessEqual(label, w, i)
        self.assertEqual(sequence_bound_improved(5, params), 6)
        self.assertEqual(prop.label((5, 1), "P"), 7)
        sup = residue_dual(code_from_divisor((5, 1), "R-P-Q", params))
        sub = residue_dual(code_from_divisor((6, 1), "R-P-Q", params))
        self.assertEqual(coset_min_weight(sub, sup), 7)

    def test_labels_never_drop(self):
        base = grid_labels(3, (-1, 20), (0, 4))
        prop = propagate_grid(base)
        self.assertTrue(((prop.wP >= base.wP) & (prop.wQ >= base.wQ)).all())
        self.assertTrue(((prop.wP == 0) == (base.wP == 0)).all())


class TestSequenceSearch(unittest.TestCase):

    def test_twopoint_sequence_is_optimal(self):
        for q in (2, 3, 4):
            found = search_sequences(q * q, q, reach=(1, q))
            for delta in range(2, q * q + 1):
                self.assertEqual(found.minimum[delta], found.twopoint_path[delta], (q, delta))

    def test_q2_minimum_is_improved_redundancy(self):
        found = search_sequences(4, 2, reach=(1, 2))
        for delta in range(2, 5):
            self.assertEqual(found.minimum[delta], sequence_redundancy(delta, 2, "twopoint", "improved", "improved"), delta)
        self.assertEqual(found.minimum[2], 1)

    def test_small_window(self):
        with self.assertRaises(WindowTooSmallError):
            search_sequences(9, 3, window=((0, 10), (0, 4)))


if __name__ == '__main__':
    unittest.main()
