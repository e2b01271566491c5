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

import unittest

import numpy as np

from pycoperm.errors import ArgumentError, TruncationError, ValidationError
from pycoperm.exact import TwoParam, GeneralParams, make_law, d_count
from pycoperm.records import Permutation, CenteredComposition, extract_records, restrict
from pycoperm.samplers import (TwoParamSampler, GeneralSampler, LimitSampler, LimitFamily, PyramidRiffleSampler,
                               ShapeSampler, FixedShapeSampler, ConditionedSampler, WindowSampler, TwoSidedShape,
                               sample_two_param, sample_conditioned, sample_from_shape, draw_shape, stream,
                               stream_next, StreamState, run_records_batch, get_rng, check_seed)
from pycoperm.samplers.sampler import BATCH_MAX_N
from pycoperm.tests.common import verbose_test
from pycoperm.verify import compare_exact_empirical, compare_uniform
from .tools import print_with_header

SEED = 20211
# Shapes deep enough for their sizes: size n reads n - 1 levels per side
DEEP_SHAPE = TwoSidedShape([0.02, 0.05, 0.1, 0.4, 0.7, 0.9, 0.95], 3)
WIDE_SHAPE = TwoSidedShape([k / 18 for k in range(1, 18)], 8)
SHALLOW_SHAPE = TwoSidedShape([0.1, 0.3, 0.5, 0.6, 0.9], 2)


def _all_samplers():
    return [TwoParamSampler(TwoParam(2, 3)),
            GeneralSampler(GeneralParams.parse(1, 1, "tail:1/2")),
            LimitSampler(LimitFamily.parse("single-record:1/2")),
            PyramidRiffleSampler("1/2"),
            ShapeSampler(TwoParam(1, 1), 8),
            FixedShapeSampler(WIDE_SHAPE),
            WindowSampler(2, 2)]


class SamplersTestCase(unittest.TestCase):
    """
    Tests that the samplers are reproducible, keep their invariants and agree
    with the exact tables on small sizes.
    """

    def test_same_seed_same_permutation(self):
        for sampler in _all_samplers():
            with self.subTest(sampler=sampler.name):
                self.assertEqual(sampler.sample(9, SEED), sampler.sample(9, SEED))
        self.assertEqual(sample_two_param(12, TwoParam(1, 1), 5), sample_two_param(12, TwoParam(1, 1), 5))

    def test_size_one(self):
        for sampler in _all_samplers():
            with self.subTest(sampler=sampler.name):
                self.assertEqual(sampler.sample(1, SEED), Permutation([1]))

    def test_invalid_size_and_seed(self):
        sampler = TwoParamSampler(TwoParam(1, 1))
        with self.assertRaises(ArgumentError):
            sampler.sample(0, SEED)
        with self.assertRaises(ArgumentError):
            sampler.sample(3, -1)
        with self.assertRaises(ArgumentError):
            check_seed(2 ** 64)
        self.assertEqual(check_seed("17"), 17)

    def test_pyramid_extremes(self):
        n = 7
        for seed in range(5):
            self.assertEqual(PyramidRiffleSampler(1).sample(n, seed), Permutation(range(n, 0, -1)))
            self.assertEqual(PyramidRiffleSampler(0).sample(n, seed), Permutation.identity(n))
        with self.assertRaises(ArgumentError):
            PyramidRiffleSampler("3/2")

    def test_limit_family(self):
        family = LimitFamily.parse("bernoulli-pyramid:1/3")
        self.assertEqual(str(family), "bernoulli-pyramid:1/3")
        self.assertEqual(family, LimitFamily("bernoulli-pyramid", "1/3"))
        with self.assertRaises(ArgumentError):
            LimitFamily.parse("bernoulli-pyramid")
        with self.assertRaises(ArgumentError):
            LimitFamily.parse("riffle:1/2")

    def test_conditioned_keeps_the_profile(self):
        composition = CenteredComposition.parse("3,1,^1,3,2")
        profile = composition.profile()
        for seed in range(200):
            p = sample_conditioned(composition, seed)
            self.assertEqual(p.n, composition.degree)
            self.assertTrue(extract_records(p).same_values(profile))
        with self.assertRaises(ValidationError):
            ConditionedSampler(composition).sample(5, SEED)

    def test_conditioned_is_uniform_on_the_class(self):
        composition = CenteredComposition.parse("2,^1,1,1")
        sampler = ConditionedSampler(composition)
        size = d_count(composition)
        table = sampler.exact_table(composition.degree)
        self.assertEqual(len(table), size)
        rng = get_rng(SEED)
        samples = list(sampler.draws(composition.degree, 200 * size, rng))
        self.assertTrue(set(samples) <= set(table.probabilities))
        report = compare_uniform(samples, size)
        if verbose_test():
            print_with_header(f"Conditioned sampler on {composition}", report)
        self.assertTrue(report.passed())

    def test_samplers_match_exact_tables(self):
        n, trials = 4, 12000
        for sampler in (TwoParamSampler(TwoParam(2, 3)),
                        GeneralSampler(GeneralParams.parse(2, 1, "-1:-1/2,1:1/2")),
                        ShapeSampler(TwoParam("1/2", 2), 8),
                        FixedShapeSampler(DEEP_SHAPE),
                        WindowSampler(2, 1)):
            with self.subTest(sampler=sampler.name):
                table = sampler.exact_table(n)
                self.assertTrue(table.is_normalized())
                report = compare_exact_empirical(table, sampler.draws(n, trials, get_rng(SEED)))
                if verbose_test():
                    print_with_header(f"{sampler.describe()}", report)
                self.assertTrue(report.passed(n))

    def test_batched_draws(self):
        sampler = GeneralSampler(GeneralParams(2, 1, {-1: "-1/2", 1: "1/2"}))
        ranks = sampler.draw_ranks_batch(5, 50, get_rng(SEED))
        self.assertEqual(ranks.shape, (50, 5))
        self.assertTrue(np.all(ranks[:, 0] == 1))
        self.assertTrue(all(1 <= ranks[t, j] <= j + 1 for t in range(50) for j in range(5)))
        self.assertEqual(list(sampler.draws(5, 30, get_rng(SEED))), list(sampler.draws(5, 30, get_rng(SEED))))
        self.assertEqual(list(sampler.draws(1, 3, get_rng(SEED))), [Permutation([1])] * 3)
        deep = list(sampler.draws(BATCH_MAX_N + 1, 3, get_rng(SEED)))
        self.assertTrue(all(p.n == BATCH_MAX_N + 1 for p in deep))

    def test_shape_truncation_agrees_with_exact_law(self):
        sampler = FixedShapeSampler(SHALLOW_SHAPE)
        self.assertTrue(sampler.exact_table(3).is_normalized())
        with self.assertRaises(TruncationError):
            sampler.exact_table(4)
        with self.assertRaises(TruncationError):
            list(sampler.draws(4, 2000, get_rng(SEED)))
        self.assertTrue(FixedShapeSampler(DEEP_SHAPE).exact_table(4).is_normalized())

    def test_pyramid_riffle_matches_limit_law(self):
        n = 4
        sampler = PyramidRiffleSampler("1/3")
        table = LimitSampler(LimitFamily("bernoulli-pyramid", "1/3")).exact_table(n)
        self.assertEqual(sampler.exact_table(n), table)
        report = compare_exact_empirical(table, sampler.draws(n, 8000, get_rng(SEED)))
        self.assertTrue(report.passed(n))

    def test_stream_prefixes_are_coherent(self):
        law = make_law(TwoParam(2, 3))
        long = stream(law, SEED, 30)
        for m in (1, 5, 17, 30):
            short = stream(law, SEED, m)
            self.assertEqual(restrict(long.permutation(), m), short.permutation())
        profile = extract_records(long.permutation())
        self.assertEqual(long.lower_count, profile.lower_count)
        self.assertEqual(long.upper_count, profile.upper_count)
        self.assertTrue(long.profile().same_values(profile))

    def test_stream_composition_follows_the_prefix(self):
        state = StreamState(make_law(GeneralParams(1, 2, tail="1/2")), SEED)
        self.assertIsNone(state.composition)
        for _ in range(25):
            state, _ = stream_next(state)
            self.assertEqual(state.composition, extract_records(state.permutation()).composition())
        lazy = stream(make_law(TwoParam(2, 3)), SEED, 40)
        self.assertEqual(lazy.composition, extract_records(lazy.permutation()).composition())
        self.assertEqual(lazy.profile(), extract_records(lazy.permutation()))

    def test_stream_next_events(self):
        state = StreamState(make_law(TwoParam(1, 1)), SEED)
        state, change = stream_next(state)
        self.assertEqual(change, {"n": 1, "rank": 1, "record": "center", "value": 1})
        for _ in range(20):
            lower, upper = state.lower_count, state.upper_count
            state, change = stream_next(state)
            if change["rank"] == 1:
                self.assertEqual(state.lower_count, lower + 1)
            elif change["rank"] == change["n"]:
                self.assertEqual(state.upper_count, upper + 1)
            else:
                self.assertIsNone(change["record"])
                self.assertEqual((state.lower_count, state.upper_count), (lower, upper))

    def test_shape_validation(self):
        with self.assertRaises(ValidationError):
            TwoSidedShape([0.5, 0.4], 0)
        with self.assertRaises(ValidationError):
            TwoSidedShape([0.2, 0.4], 2)
        with self.assertRaises(ValidationError):
            TwoSidedShape([-0.1, 0.4], 1)
        shape = TwoSidedShape([0.5], 0)
        with self.assertRaises(TruncationError):
            sample_from_shape(shape, 50, SEED)

    def test_drawn_shapes(self):
        rng = get_rng(SEED)
        for params in (TwoParam(1, 1), GeneralParams.parse(2, 1, "-1:-1/2,1:1/2")):
            for _ in range(50):
                shape = draw_shape(params, rng, 6)
                self.assertEqual((shape.depth_lower, shape.depth_upper), (6, 6))
                values = shape.values()
                self.assertTrue(np.all(np.diff(values) >= 0))
                self.assertTrue(0 <= values[0] and values[-1] <= 1)
        with self.assertRaises(ArgumentError):
            draw_shape(TwoParam(1, 1), rng, 0)

    def test_records_batch(self):
        n, trials = 60, 2500
        batch = run_records_batch(TwoParam(1, 1), n, trials, SEED, depth=2, late_start=30, checkpoints=(10, n))
        self.assertEqual(batch.trials, trials)
        self.assertEqual(batch.values.shape, (trials, 5))
        self.assertEqual(batch.checkpoints.shape, (trials, 2))
        np.testing.assert_array_equal(batch.checkpoints[:, 1], batch.lower_count)
        self.assertTrue(np.all(batch.checkpoints[:, 0] <= batch.checkpoints[:, 1]))
        self.assertTrue(np.all(batch.late_lower <= batch.lower_count))
        self.assertTrue(np.all(batch.lower_count + batch.upper_count <= n - 1))
        self.assertTrue(np.all((batch.center() >= 1) & (batch.center() <= n)))
        for row in batch.values[:100]:
            present = row[row > 0]
            self.assertTrue(np.all(np.diff(present) > 0))
        with self.assertRaises(ArgumentError):
            batch.record_value(3)
        again = run_records_batch(TwoParam(1, 1), n, trials, SEED, depth=2, late_start=30, checkpoints=(10, n))
        np.testing.assert_array_equal(batch.values, again.values)

    def test_records_batch_needs_two_param_for_values(self):
        with self.assertRaises(ArgumentError):
            run_records_batch(GeneralParams.parse(1, 1, "tail:1/2"), 20, 10, SEED, depth=2)
        batch = run_records_batch(GeneralParams.parse(1, 1, "tail:1/2"), 20, 10, SEED)
        self.assertEqual(batch.values.shape, (10, 1))


if __name__ == '__main__':
    unittest.main()
