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
import numpy as np
from pyhermitcodes.hermitian_curve import curve_params, dual_divisor
from pyhermitcodes.riemann_roch import Monomial
from pyhermitcodes.code_builder import (LinearCode, classical_code, code_from_divisor, residue_dual, shorten,
                                        improved_code, sequence_code, check_table, step_check_monomial,
                                        generator_pole_order, equivalence_pair, equivalent_codes, evaluation_matrix,
                                        support_spec, VacuousCodeError, EQUIVALENCE_CASES)


class TestClassicalCodes(unittest.TestCase):

    def test_introduction_dimensions(self):
        C = classical_code("onepoint", 59, 4)
        self.assertEqual((C.n, C.k), (64, 54))
        self.assertEqual(classical_code("onepoint", 60, 4).k, 55)
        self.assertEqual((classical_code("twopoint", 60, 4).n, classical_code("twopoint", 60, 4).k), (63, 53))
        self.assertEqual(classical_code("twopoint", 61, 4).k, 54)

    def test_empty_space(self):
        C = classical_code("twopoint", 0, 2)
        self.assertEqual((C.n, C.k), (7, 0))
        self.assertEqual(C.redundancy, 7)

    def test_bad_arguments(self):
        with self.assertRaises(ValueError):
            classical_code("onepoint", -1, 2)
        with self.assertRaises(ValueError):
            classical_code("threepoint", 3, 2)
        with self.assertRaises(ValueError):
            LinearCode(curve_params(2).field, 8)

    def test_evaluation_of_constant(self):
        supp = support_spec("R-P", 2)
        row = np.asarray(evaluation_matrix([Monomial(0, 0)], supp, 2))
        self.assertTrue((row == 1).all())

    def test_dual_divisor(self):
        #Q lies in the support of R - P, so G has no Q part there
        for support, ns in (("R-P", (0,)), ("R-P-Q", (-2, 0, 1))):
            for m in range(-1, 12):
                for n in ns:
                    C = code_from_divisor((m, n), support, 2)
                    D = code_from_divisor(dual_divisor((m, n), support, 2), support, 2)
                    self.assertTrue(residue_dual(C).same_space(D), (support, m, n))

    def test_residue_dual_is_orthogonal(self):
        C = classical_code("onepoint", 5, 3)
        R = residue_dual(C)
        self.assertEqual(C.k + R.k, C.n)
        self.assertFalse(np.asarray(C.gen @ R.gen.T).any())
        self.assertTrue(residue_dual(R).same_space(C))

    def test_shorten_at_origin(self):
        for a in range(0, 10):
            C = classical_code("onepoint", a, 2)
            S = shorten(C, 0)
            self.assertTrue(S.same_space(code_from_divisor((a, -1), "R-P-Q", 2)), a)
        with self.assertRaises(ValueError):
            shorten(classical_code("onepoint", 3, 2), 8)


class TestImprovedCodes(unittest.TestCase):

    def test_improved_onepoint_q4(self):
        C = improved_code("onepoint", 5, 4)
        self.assertEqual((C.n, C.k), (64, 56))

    def test_redundancies_follow_table(self):
        rows = {3: (3, 3, 3), 4: (6, 5, 5), 5: (10, 8, 8), 6: (11, 9, 8), 9: (14, 13, 13)}
        for delta, (c1, i1, i2) in rows.items():
            self.assertEqual(sequence_code("onepoint", delta, 4, "simple", "classical").redundancy, c1)
            self.assertEqual(improved_code("onepoint", delta, 4).redundancy, i1)
            self.assertEqual(improved_code("twopoint", delta, 4).redundancy, i2)

    def test_improved_contains_classical(self):
        classical = sequence_code("twopoint", 6, 4, "improved", "classical")
        improved = improved_code("twopoint", 6, 4)
        self.assertTrue(improved.contains(classical))

    def test_vacuous(self):
        with self.assertRaises(VacuousCodeError):
            improved_code("onepoint", 65, 4)
        with self.assertRaises(ValueError):
            improved_code("onepoint", 1, 4)

    def test_check_tables_q8(self):
        onepoint = check_table("onepoint", 19, 8, "simple", "improved")
        self.assertEqual(len(onepoint), 46)
        self.assertEqual(sum(1 for e in onepoint if e.kept), 39)
        twopoint = check_table("twopoint", 19, 8)
        self.assertEqual(sum(1 for e in twopoint if e.kept), 37)
        #the classical checks are the monomials of L(73P)
        last = onepoint[-1]
        self.assertEqual(last.step, 72)
        self.assertEqual(last.monomial, Monomial(8, 1))
        self.assertEqual((last.bound, last.kept), (18, True))
        self.assertEqual(sum(1 for e in onepoint if not e.kept), 7)

    def test_step_monomials(self):
        self.assertEqual(step_check_monomial(73, "onepoint", 8), (Monomial(7, 2), 0))
        self.assertIsNone(step_check_monomial(1, "onepoint", 4))
        mu, twist = step_check_monomial(10, "twopoint", 4)
        self.assertEqual(twist, 1)
        self.assertEqual(generator_pole_order(0, 4), 74)


class TestEquivalence(unittest.TestCase):

    def test_divisors(self):
        support, G_star, G = equivalence_pair("1", 2, 1, 4)
        self.assertEqual(support, "R-P")
        self.assertEqual(tuple(G_star), (19, 0))
        self.assertEqual(tuple(G), (55, 0))
        with self.assertRaises(ValueError):
            equivalence_pair("3", 0, 0, 4)

    def test_divisors_sum_to_canonical_plus_support(self):
        support, G_star, G = equivalence_pair("2'", 2, 1, 4)
        self.assertEqual(support, "R-P-Q")
        self.assertEqual(tuple(G_star), (19, -4))
        self.assertEqual(tuple(G), (55, 3))
        for q in (2, 3, 4, 8):
            top = q**3 + q**2 - q - 2
            for case in EQUIVALENCE_CASES:
                support, G_star, G = equivalence_pair(case, 3, 1, q)
                total = (G_star[0] + G[0], G_star[1] + G[1])
                self.assertEqual(total, (top, 0) if support == "R-P" else (top, -1), (q, case))

    def test_equivalence(self):
        for q in (2, 3):
            for case in EQUIVALENCE_CASES:
                for d in range(0, q * q + 2):
                    for a in range(q + 1):
                        omega, ev = equivalent_codes(case, d, a, q)
                        self.assertTrue(omega.same_space(ev), (q, case, d, a))


if __name__ == '__main__':
    unittest.main()
