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

from pycoperm.errors import OrderError, ResourceError, TruncationError
from pycoperm.exact import (TwoParam, GeneralParams, d_count, d_ext, martin_ratio, followers, composition_count,
                            composition_count_formula, centered_compositions, extension_count, record_stirling,
                            class_sizes, class_size_bruteforce, extension_profiles, coherent_extensions,
                            phi_boundary, permutation_weight_from_shape, w_table, w_table_from_tables, check_dual,
                            pushforward_table, make_law)
from pycoperm.records import Permutation, CenteredComposition, extract_records, restrict
from pycoperm.samplers import TwoSidedShape
from pycoperm.tests.common import verbose_test
from .tools import print_with_header


def _c(text):
    return CenteredComposition.parse(text)


class BoundaryTestCase(unittest.TestCase):
    """
    Tests the composition poset: class sizes, extension counts, Martin ratios
    and the dual recursion.
    """

    def test_d_count_examples(self):
        self.assertEqual(d_count(_c("1,^1,1")), 2)
        self.assertEqual(d_count(_c("^1")), 1)
        self.assertEqual(d_count(_c("3,1,^1,3,2")), 3024)

    def test_d_count_matches_enumeration(self):
        for n in range(1, 7):
            sizes = class_sizes(n)
            self.assertEqual(sum(sizes.values()), math.factorial(n))
            for composition in centered_compositions(n):
                self.assertEqual(d_count(composition), sizes[composition])

    def test_class_size_bruteforce(self):
        for text in ("1,^1,1", "2,^1,2", "1,1,^1,3"):
            self.assertEqual(class_size_bruteforce(_c(text)), d_count(_c(text)))

    def test_d_ext(self):
        self.assertEqual(d_ext(_c("^1,1"), _c("^1,2")), 1)
        self.assertEqual(d_ext(_c("2,^1,1"), _c("2,^1,1")), 1)
        for mu in centered_compositions(5):
            self.assertEqual(d_ext(_c("^1"), mu), d_count(mu))
        with self.assertRaises(OrderError):
            d_ext(_c("^1,2"), _c("1,^1,1"))

    def test_d_ext_matches_coherent_extensions(self):
        for n in range(1, 4):
            for p in Permutation.all(n):
                small = extract_records(p).composition()
                for big, count in extension_profiles(p, 6).items():
                    self.assertEqual(d_ext(small, big), count)
        p = Permutation.parse("2,1,3")
        self.assertEqual(coherent_extensions(p, _c("2,1,^1,2")), d_ext(_c("1,^1,1"), _c("2,1,^1,2")))

    def test_martin_ratio(self):
        for mu in centered_compositions(6):
            self.assertEqual(martin_ratio(_c("^1"), mu), 1)
            self.assertEqual(martin_ratio(mu, mu), Fraction(1, d_count(mu)))
        for small in centered_compositions(3):
            for big in centered_compositions(6):
                try:
                    exact = Fraction(d_ext(small, big), d_count(big))
                except OrderError:
                    continue
                self.assertEqual(martin_ratio(small, big), exact)

    def test_followers(self):
        expected = ["1,3,1,^1,3,2", "4,1,^1,3,2", "3,2,^1,3,2", "3,1,^1,4,2", "3,1,^1,3,3", "3,1,^1,3,2,1"]
        self.assertEqual(set(followers(_c("3,1,^1,3,2"))), {_c(text) for text in expected})
        self.assertEqual(set(followers(_c("^1"))), {_c("1,^1"), _c("^1,1")})

    def test_d_count_through_extensions(self):
        for n in range(2, 7):
            for mu in centered_compositions(n):
                total = 0
                for small in centered_compositions(n - 1):
                    try:
                        total += d_count(small) * d_ext(small, mu)
                    except OrderError:
                        pass
                self.assertEqual(total, d_count(mu))
        self.assertEqual(d_ext(_c("^1,2"), _c("^1,3")), 2)

    def test_composition_count(self):
        self.assertEqual([composition_count(n) for n in (2, 3, 4)], [2, 5, 12])
        for n in range(2, 12):
            self.assertEqual(composition_count(n), composition_count_formula(n))

    def test_extension_count(self):
        self.assertEqual(extension_count(4, 1, 1, 4, 1, 1), record_stirling(4, 1, 1))
        self.assertEqual(extension_count(4, 1, 1, 4, 2, 1), 0)
        for l2 in range(5):
            for u2 in range(5 - l2):
                self.assertEqual(extension_count(1, 0, 0, 5, l2, u2), record_stirling(5, l2, u2))
        with self.assertRaises(ResourceError):
            extension_count(1, 0, 0, 61, 1, 1)

    def test_extension_count_matches_restrictions(self):
        counts = {}
        for p in Permutation.all(6):
            small = extract_records(restrict(p, 3))
            big = extract_records(p)
            key = (small.lower_count, small.upper_count, big.lower_count, big.upper_count)
            counts[key] = counts.get(key, 0) + 1
        for (l, u, l2, u2), count in counts.items():
            self.assertEqual(extension_count(3, l, u, 6, l2, u2), count)

    def test_phi_boundary(self):
        shape = TwoSidedShape([0.4, 0.7], 0)
        self.assertAlmostEqual(phi_boundary(_c("^1,2"), shape), 0.18)
        self.assertEqual(phi_boundary(_c("^1"), shape), 1.0)
        p = 0.3
        constant = TwoSidedShape([p] * 5, 2)
        self.assertAlmostEqual(phi_boundary(_c("1,1,^1,1,1"), constant), p ** 2 * (1 - p) ** 2)
        composition = _c("2,^1,3")
        deep = TwoSidedShape([0.1, 0.3, 0.5, 0.6, 0.9], 2)
        self.assertAlmostEqual(permutation_weight_from_shape(composition, deep),
                               phi_boundary(composition, deep) / math.factorial(2))
        with self.assertRaises(TruncationError):
            phi_boundary(_c("^1,1,1,1"), shape)

    def test_w_table_dual_recursion(self):
        for params in (TwoParam(1, 1), TwoParam(2, 3), TwoParam("1/2", 3)):
            table = w_table(params, 7)
            self.assertTrue(check_dual(table))
            self.assertFalse(check_dual(table, "mass"))
        table = w_table(TwoParam(1, 1), 3)
        if verbose_test():
            print_with_header("Uniform WTable up to n=3", table.to_dict())
        self.assertEqual(table.mass[(3, 1, 1)], Fraction(1, 3))
        self.assertEqual(table.mass[(2, 1, 0)], Fraction(1, 2))

    def test_w_table_from_tables(self):
        params = TwoParam(2, 3)
        tables = [pushforward_table(n, make_law(params)) for n in range(1, 6)]
        from_tables = w_table_from_tables(tables)
        closed = w_table(params, 5)
        self.assertEqual(from_tables.weight, closed.weight)
        self.assertEqual(from_tables.mass, closed.mass)

    def test_general_w_table_is_class_average(self):
        params = GeneralParams(1, 1, tail="1/2")
        table = w_table(params, 5)
        tables = w_table_from_tables([pushforward_table(n, make_law(params)) for n in range(1, 6)])
        self.assertEqual(table.mass, tables.mass)


if __name__ == '__main__':
    unittest.main()
