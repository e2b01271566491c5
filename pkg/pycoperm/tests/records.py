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
from collections import Counter

from pycoperm.errors import InvalidEncodingError, ArgumentError, ValidationError, InvalidSequenceError
from pycoperm.records import (Permutation, InitialRanks, to_initial_ranks, from_initial_ranks, restrict,
                              complement, inverse, extract_records, profile_composition, RecordProfile,
                              CenteredComposition, ordered_blocks, classical_project, hat_bijection, cycles,
                              fold_records, rank_order, ONE_ROW_DELETE, CYCLE_DELETE, FORWARD, INVERSE, LOW, HIGH)
from pycoperm.tests.common import verbose_test, EXAMPLE_WORD
from .tools import print_with_header


class RecordsTestCase(unittest.TestCase):
    """
    Tests the permutation encodings, the record profiles and the bijections.
    """

    def setUp(self):
        self.example = Permutation.parse(EXAMPLE_WORD)

    def test_initial_ranks_of_worked_example(self):
        self.assertEqual(to_initial_ranks(self.example), InitialRanks([1, 1, 3, 3, 1, 4, 7, 5]))
        self.assertEqual(to_initial_ranks(Permutation([2, 3, 1])).ranks, (1, 2, 1))
        self.assertEqual(to_initial_ranks(Permutation([1])).ranks, (1,))

    def test_from_initial_ranks_inverts_encoding(self):
        self.assertEqual(from_initial_ranks([1, 1, 3, 3, 1, 4, 7, 5]), self.example)
        self.assertEqual(from_initial_ranks([1, 2, 1]), Permutation([2, 3, 1]))
        for n in range(1, 6):
            for p in Permutation.all(n):
                self.assertEqual(from_initial_ranks(to_initial_ranks(p)), p)

    def test_invalid_encodings(self):
        with self.assertRaises(InvalidEncodingError):
            InitialRanks([1, 3])
        with self.assertRaises(InvalidEncodingError):
            Permutation([1, 1, 2])
        with self.assertRaises(InvalidEncodingError):
            InitialRanks([])

    def test_extract_records(self):
        profile = extract_records(self.example)
        if verbose_test():
            print_with_header(f"Records of {self.example}", profile)
        self.assertEqual(profile.values, (1, 2, 3, 7, 8))
        self.assertEqual((profile.lower_count, profile.upper_count), (2, 2))
        profile = extract_records(Permutation([2, 3, 1]))
        self.assertEqual(str(profile), "1,[2],3")
        self.assertEqual(profile.times, {0: 1, 1: 2, -1: 3})
        self.assertEqual(extract_records(Permutation([1])).values, (1,))

    def test_restrict(self):
        self.assertEqual(restrict(self.example, 8), self.example)
        self.assertEqual(restrict(self.example, 4), Permutation([2, 1, 4, 3]))
        self.assertEqual(restrict(Permutation([2, 3, 1]), 1), Permutation([1]))
        with self.assertRaises(ArgumentError):
            restrict(self.example, 9)

    def test_restrict_is_coherent(self):
        for p in Permutation.all(5):
            for m in range(1, 5):
                self.assertEqual(restrict(restrict(p, m + 1), m), restrict(p, m))

    def test_complement_swaps_records(self):
        for p in Permutation.all(5):
            a, b = extract_records(p), extract_records(complement(p))
            self.assertEqual((a.lower_count, a.upper_count), (b.upper_count, b.lower_count))

    def test_inverse_keeps_lower_count(self):
        for p in Permutation.all(5):
            self.assertEqual(extract_records(p).lower_count, extract_records(inverse(p)).lower_count)

    def test_classical_projections(self):
        self.assertEqual(classical_project(Permutation([3, 1, 2]), ONE_ROW_DELETE), Permutation([1, 2]))
        self.assertEqual(classical_project(Permutation([2, 3, 1]), CYCLE_DELETE), Permutation([2, 1]))
        self.assertEqual(classical_project(Permutation([1, 2]), ONE_ROW_DELETE), Permutation([1]))
        with self.assertRaises(ArgumentError):
            classical_project(Permutation([1]), CYCLE_DELETE)

    def test_hat_bijection(self):
        hat = hat_bijection(self.example, FORWARD)
        self.assertEqual(cycles(hat), [(1, 4, 8, 5), (2, 7, 6), (3,)])
        self.assertEqual(hat_bijection(Permutation([2, 1])), Permutation([1, 2]))
        for n in range(1, 6):
            images = set()
            for p in Permutation.all(n):
                image = hat_bijection(p, FORWARD)
                images.add(image)
                self.assertEqual(hat_bijection(image, INVERSE), p)
                # Lower records (center included) become cycles
                self.assertEqual(len(cycles(image)), extract_records(p).lower_count + 1)
            self.assertEqual(len(images), math.factorial(n))

    def test_fold_records_fibers(self):
        self.assertEqual(fold_records(Permutation([2, 1])), Permutation([1]))
        for n in (3, 4, 5):
            fibers = Counter(fold_records(p) for p in Permutation.all(n))
            self.assertEqual(sum(fibers.values()), math.factorial(n))
            for image, size in fibers.items():
                r = extract_records(image).lower_count
                self.assertEqual(size, 2 ** (r + 1))
        with self.assertRaises(ArgumentError):
            fold_records(Permutation([1]))

    def test_profile_composition(self):
        profile = RecordProfile.parse("1,2,[3],7,8")
        composition = profile_composition(profile)
        self.assertEqual(composition.parts, (1, 1, 1, 4, 1))
        self.assertEqual(composition.lower_count, 2)
        self.assertEqual(composition.degree, 8)
        self.assertEqual(profile_composition(CenteredComposition.parse("3,1,^1,3,2")).values, (1, 4, 5, 8, 10))
        self.assertEqual(profile_composition(CenteredComposition.parse("^1")).values, (1,))
        with self.assertRaises(ValidationError):
            profile_composition("1,[2]")

    def test_profile_validation(self):
        with self.assertRaises(ValidationError):
            RecordProfile([1, 3, 2], 1)
        with self.assertRaises(ValidationError):
            RecordProfile([2, 3], 0)
        with self.assertRaises(ValidationError):
            CenteredComposition([2, 2], 0)
        with self.assertRaises(InvalidEncodingError):
            CenteredComposition.parse("1,1,2")

    def test_ordered_blocks(self):
        self.assertEqual(ordered_blocks(Permutation([1])).sizes(), [1])
        blocks = ordered_blocks(Permutation([2, 3, 1])).blocks
        self.assertEqual(blocks, {0: {1}, 1: {2}, -1: {3}})
        self.assertEqual(ordered_blocks(self.example).sizes(), [1, 1, 1, 4, 1])

    def test_rank_order(self):
        self.assertEqual(rank_order([0.5, 0.9, 0.1]).ranks, (1, 2, 1))
        self.assertEqual(rank_order([0.3, 0.3, 0.7], [LOW]).ranks, (1, 1, 3))
        self.assertEqual(rank_order([0.5] * 5, [LOW] * 4).ranks, (1, 1, 1, 1, 1))
        self.assertEqual(rank_order([0.5] * 3, [HIGH, HIGH]).ranks, (1, 2, 3))
        with self.assertRaises(ArgumentError):
            rank_order([0.5, 0.5, 0.7])

    def test_rank_order_rejects_inner_repetition(self):
        with self.assertRaises(InvalidSequenceError):
            rank_order([0.1, 0.9, 0.5, 0.5])


if __name__ == '__main__':
    unittest.main()
