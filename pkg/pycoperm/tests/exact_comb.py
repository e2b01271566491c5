#
#  This file is part of Python Coherent Permutations (PyCoPerm)
#
#  Copyright (C) 2021 Universitat Jaume I
#
#  PyCoPerm is free software: you can redistribute it and/or modify it under the
#  terms of the GNU General Public License as published by the Free Software
#  Foundation, either version 3 of the License, or (at your option) any later
#  version.
#
#  This program is distributed in the hope that it will be useful, but WITHOUT
#  ANY WARRANTY; without even the implied warranty of MERCHANTABILITY
#  or FITNESS FOR A PARTICULAR PURPOSE.  See the GNU General Public
#  License for more details.
#
#  You should have received a copy of the GNU General Public License along
#  with this program.  If not, see <https://www.gnu.org/licenses/>.
#

import math
import unittest
from fractions import Fraction

from pycoperm.errors import ArgumentError, DomainError, ResourceError
from pycoperm.exact import (TwoParam, GeneralParams, TwoParamLaw, PyramidLaw, SingleRecordLaw,
                            ThetaZeroLaw, make_law, record_stirling, record_stirling_table,
                            record_stirling_enumerated, record_stirling_identity, signless_stirling,
                            lower_marginal, check_generating_function, perm_probability,
                            general_perm_probability, general_closed_form, equal_param_probability, step_law,
                            literal_step_law, pushforward_table, pe_pmf, pe_law, record_chain_step,
                            position_chain_step, LOWER, UPPER, count_mean, count_variance, window_pushforward_table,
                            ENUMERATION_CAP, w_table)
from pycoperm.records import Permutation, extract_records
from pycoperm.tests.common import verbose_test, two_param_grid, general_grid
from pycoperm.utils import rising
from .tools import print_table


def _params(p):
    return GeneralParams.parse(p.theta, p.zeta, p.alpha) if p.alpha else TwoParam(p.theta, p.zeta)


class ExactCombTestCase(unittest.TestCase):
    """
    Tests the exact rational computations: record Stirling numbers, step laws,
    pushforward tables and the Polya-Eggenberger laws.
    """

    def test_record_stirling_values(self):
        self.assertEqual(record_stirling(1, 0, 0), 1)
        self.assertEqual(record_stirling(4, 1, 1), 6)
        self.assertEqual(record_stirling_table(3), {(0, 1): 1, (0, 2): 1, (1, 0): 1, (1, 1): 2, (2, 0): 1})
        self.assertEqual(record_stirling(4, 3, 1), 0)

    def test_record_stirling_recursion_enumeration_identity(self):
        for n in range(1, 8):
            enumerated = record_stirling_enumerated(n)
            self.assertEqual(record_stirling_table(n), enumerated)
            self.assertEqual(sum(enumerated.values()), math.factorial(n))
            for (l, u), count in enumerated.items():
                self.assertEqual(record_stirling_identity(n, l, u), count)
                self.assertEqual(record_stirling(n, u, l), count)

    def test_lower_marginal_is_stirling_first_kind(self):
        for n in range(1, 9):
            for l in range(n):
                self.assertEqual(lower_marginal(n, l), signless_stirling(n, l + 1))

    def test_generating_function(self):
        self.assertTrue(check_generating_function(1, TwoParam(7, 3)))
        self.assertTrue(check_generating_function(3, TwoParam(1, 1)))
        self.assertTrue(check_generating_function(3, TwoParam(2, 3)))
        for n in range(1, 9):
            self.assertTrue(check_generating_function(n, TwoParam("1/2", "5/2")))

    def test_perm_probability(self):
        self.assertEqual(perm_probability(Permutation([2, 3, 1]), TwoParam(2, 3)), Fraction(1, 5))
        self.assertEqual(perm_probability(Permutation([1]), TwoParam(2, 3)), 1)
        for p in Permutation.all(4):
            self.assertEqual(perm_probability(p, TwoParam(1, 1)), Fraction(1, 24))
            self.assertEqual(equal_param_probability(p, 3), perm_probability(p, TwoParam(3, 3)))

    def test_general_reduces_to_two_param(self):
        params = GeneralParams(2, 3)
        self.assertEqual(general_perm_probability(Permutation([2, 3, 1]), params), Fraction(1, 5))
        self.assertEqual(general_perm_probability(Permutation([1]), params), 1)
        for p in Permutation.all(4):
            self.assertEqual(general_perm_probability(p, params), perm_probability(p, TwoParam(2, 3)))

    def test_general_closed_form_matches_path_product(self):
        for p_ in general_grid:
            params = _params(p_)
            for p in Permutation.all(p_.n):
                composition = extract_records(p).composition()
                self.assertEqual(general_perm_probability(p, params), general_closed_form(composition, params))

    def test_step_law(self):
        state = extract_records(Permutation([1, 2]))
        law = step_law(state, 3, TwoParam(1, 1))
        self.assertEqual(law, {1: Fraction(1, 3), 2: Fraction(1, 3), 3: Fraction(1, 3)})
        general = GeneralParams(1, 1, {1: "1/2"})
        state = extract_records(Permutation([1, 3, 2]))
        self.assertEqual(sum(step_law(state, 4, general).values()), 1)
        self.assertEqual(sum(literal_step_law(state, 4, general).values()), Fraction(7, 8))
        with self.assertRaises(ArgumentError):
            step_law(state, 5, general)

    def test_principal_domain(self):
        with self.assertRaises(DomainError):
            TwoParam(0, 1)
        with self.assertRaises(DomainError):
            GeneralParams(1, 1, {1: 1})
        with self.assertRaises(DomainError):
            GeneralParams(1, 1, {-1: -2})
        with self.assertRaises(DomainError):
            GeneralParams(1, 1, tail="-1/4")

    def test_pushforward_tables(self):
        table = pushforward_table(3, TwoParamLaw(TwoParam(1, 1)))
        self.assertEqual(len(table), 6)
        self.assertTrue(all(q == Fraction(1, 6) for _, q in table.items()))
        table = pushforward_table(2, TwoParamLaw(TwoParam(2, 3)))
        self.assertEqual(table[Permutation([1, 2])], Fraction(3, 5))
        self.assertEqual(table[Permutation([2, 1])], Fraction(2, 5))
        for p_ in two_param_grid + general_grid:
            table = pushforward_table(p_.n, make_law(_params(p_)))
            if verbose_test():
                print_table(f"Pushforward table ({p_})", table)
            self.assertTrue(table.is_normalized())
            self.assertEqual(table.restrict(p_.n - 1), pushforward_table(p_.n - 1, make_law(_params(p_))))

    def test_pushforward_cap(self):
        with self.assertRaises(ResourceError):
            pushforward_table(ENUMERATION_CAP + 1, TwoParamLaw(TwoParam(1, 1)))

    def test_limit_laws(self):
        n = 4
        self.assertEqual(pushforward_table(n, PyramidLaw(1))[Permutation([4, 3, 2, 1])], 1)
        self.assertEqual(pushforward_table(n, PyramidLaw(0))[Permutation([1, 2, 3, 4])], 1)
        table = pushforward_table(n, PyramidLaw(Fraction(1, 3)))
        for p, q in table.items():
            profile = extract_records(p)
            self.assertEqual(profile.lower_count + profile.upper_count, n - 1)
            self.assertEqual(q, Fraction(1, 3) ** profile.lower_count * Fraction(2, 3) ** profile.upper_count)
        table = pushforward_table(n, SingleRecordLaw(1))
        self.assertEqual({p for p, _ in table.items()}, {Permutation([1, 4, 2, 3]), Permutation([1, 4, 3, 2])})
        table = pushforward_table(n, ThetaZeroLaw(2))
        self.assertTrue(all(p[0] == 1 for p, _ in table.items()))
        self.assertTrue(table.is_normalized())

    def test_window_projection(self):
        for theta, zeta in ((1, 2), (2, 2), (3, 1)):
            for n in range(1, 5):
                self.assertEqual(window_pushforward_table(n, theta, zeta),
                                 pushforward_table(n, TwoParamLaw(TwoParam(theta, zeta))))

    def test_pe_law(self):
        self.assertEqual(pe_pmf(1, TwoParam(2, 3), 1), 1)
        for n in range(1, 7):
            self.assertTrue(all(q == Fraction(1, n) for q in pe_law(n, TwoParam(1, 1)).values()))
            self.assertEqual(sum(pe_law(n, TwoParam(2, 3)).values()), 1)
        table = pushforward_table(5, TwoParamLaw(TwoParam(2, 3)))
        self.assertEqual(table.marginal(lambda p: p[0]), pe_law(5, TwoParam(2, 3)))
        with self.assertRaises(ArgumentError):
            pe_pmf(3, TwoParam(1, 1), 4)

    def test_record_chain_step(self):
        params = TwoParam(2, 3)
        self.assertEqual(record_chain_step(1, 6, params, LOWER), {1: 1})
        self.assertEqual(record_chain_step(6, 6, params, UPPER), {6: 1})
        for r in range(2, 7):
            row = record_chain_step(r, 6, params, LOWER)
            self.assertEqual(sum(row.values()), 1)
            self.assertTrue(all(1 <= v < r for v in row))
        for r in range(1, 6):
            row = record_chain_step(r, 6, params, UPPER)
            self.assertEqual(sum(row.values()), 1)
            self.assertTrue(all(r < v <= 6 for v in row))

    def test_exact_values_stay_rational(self):
        self.assertIs(type(rising(3, 0)), Fraction)
        self.assertIs(type(pe_pmf(1, TwoParam(2, 3), 1)), Fraction)
        self.assertIs(type(record_chain_step(2, 5, TwoParam(2, 3), LOWER)[1]), Fraction)
        params = GeneralParams(1, 1, tail="1/2")
        for p in Permutation.all(3):
            value = general_closed_form(extract_records(p).composition(), params)
            self.assertIs(type(value), Fraction)
            self.assertEqual(value, general_perm_probability(p, params))
        self.assertTrue(all(type(m) is Fraction for m in w_table(params, 4).mass.values()))

    def test_position_chain_step(self):
        step = position_chain_step(2, 5, TwoParam(1, 1))
        self.assertEqual(step, {3: Fraction(2, 5), 2: Fraction(3, 5)})
        with self.assertRaises(ArgumentError):
            position_chain_step(5, 5, TwoParam(1, 1))

    def test_count_moments_match_table(self):
        for p_ in two_param_grid:
            params = _params(p_)
            table = pushforward_table(p_.n, TwoParamLaw(params))
            for side in ("lower", "upper"):
                count = (lambda p: extract_records(p).lower_count) if side == "lower" else \
                    (lambda p: extract_records(p).upper_count)
                mean = sum((count(p) * q for p, q in table.items()), Fraction(0))
                second = sum((count(p) ** 2 * q for p, q in table.items()), Fraction(0))
                self.assertEqual(count_mean(params, p_.n, side), mean)
                self.assertEqual(count_variance(params, p_.n, side), second - mean ** 2)


if __name__ == '__main__':
    unittest.main()
