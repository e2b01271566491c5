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

import json
import unittest
from fractions import Fraction
from itertools import product
from types import SimpleNamespace

import numpy as np

from pycoperm.errors import ArgumentError, ResourceError
from pycoperm.exact import TwoParam, GeneralParams, DistTable, make_law, pushforward_table
from pycoperm.records import Permutation
from pycoperm.tests.common import verbose_test, two_param_grid
from pycoperm.verify import (compare_exact_empirical, compare_uniform, pooled_chisquare,
                             check_conditional_uniformity, get_statistic, check_indicator_structure,
                             q_eta_probability, record_moments, mc_asymptotics, Report, MomentReport, PASS, FAIL,
                             INFO, get_suite, suite_class, SUITES, EXPERIMENTS)
from pycoperm.verify.experiments import experiment_class
from .tools import print_with_header


class VerifyTestCase(unittest.TestCase):
    """
    Tests the comparison statistics, the exact structural checks, the reports
    and small runs of the suites and the Monte Carlo experiments.
    """

    def test_exact_frequencies_have_no_divergence(self):
        table = pushforward_table(3, make_law(TwoParam(1, 1)))
        samples = [p for p in Permutation.all(3) for _ in range(100)]
        report = compare_exact_empirical(table, samples)
        self.assertAlmostEqual(report.tv, 0.0)
        self.assertAlmostEqual(report.chi2, 0.0)
        self.assertTrue(report.passed(3))

    def test_wrong_law_is_rejected(self):
        table = pushforward_table(3, make_law(TwoParam(1, 1)))
        report = compare_exact_empirical(table, [Permutation.identity(3)] * 600)
        self.assertAlmostEqual(report.tv, 5 / 6)
        self.assertFalse(report.passed(3))
        with self.assertRaises(ArgumentError):
            compare_exact_empirical(table, [Permutation.identity(4)])
        with self.assertRaises(ArgumentError):
            compare_exact_empirical(table, [])

    def test_zero_probability_cell_rejects(self):
        statistic, dof, p_value = pooled_chisquare([10, 10, 1], [10.5, 10.5, 0])
        self.assertEqual(statistic, np.inf)
        self.assertEqual(p_value, 0.0)

    def test_compare_uniform(self):
        samples = [Permutation([2, 1, 3]), Permutation([2, 3, 1])] * 50
        report = compare_uniform(samples, 2)
        self.assertAlmostEqual(report.tv, 0.0)
        self.assertTrue(report.passed())
        report = compare_uniform(samples, 4)
        self.assertAlmostEqual(report.tv, 0.5)
        self.assertFalse(report.passed())
        with self.assertRaises(ArgumentError):
            compare_uniform(samples, 1)

    def test_conditional_uniformity(self):
        for p in two_param_grid:
            table = pushforward_table(p.n, make_law(TwoParam(p.theta, p.zeta)))
            for stat in ("rec", "l,u"):
                with self.subTest(params=p, stat=stat):
                    ok, report = check_conditional_uniformity(table, stat)
                    self.assertTrue(ok)
        skewed = DistTable(3, {Permutation([2, 1, 3]): Fraction(1, 3), Permutation([2, 3, 1]): Fraction(2, 3)})
        ok, report = check_conditional_uniformity(skewed, "(l,u)")
        self.assertFalse(ok)
        self.assertEqual(report.verdict, FAIL)
        with self.assertRaises(ArgumentError):
            get_statistic("descents")

    def test_general_law_is_uniform_on_record_classes(self):
        params = GeneralParams.parse(2, 1, "-1:-1/2,1:1/2")
        table = pushforward_table(5, make_law(params))
        ok, _ = check_conditional_uniformity(table, "rec")
        self.assertTrue(ok)

    def test_indicator_structure(self):
        for params in (TwoParam(1, 1), TwoParam(2, 3), TwoParam("1/2", 3)):
            ok, report = check_indicator_structure(params, 5)
            if verbose_test():
                print_with_header(f"Indicators {params}", report.to_dict())
            self.assertTrue(ok)
            self.assertEqual(report.verdict, PASS)

    def test_q_eta_is_a_probability(self):
        for eta in (Fraction(1, 2), Fraction(5)):
            total = sum(q_eta_probability(b, eta) for b in product((0, 1), repeat=5))
            self.assertEqual(total, 1)
        self.assertEqual(q_eta_probability((1,), 3), 1)

    def test_reports(self):
        report = Report("demo", TwoParam(1, 2), 5, 10, 0)
        report.add("mean", Fraction(1, 3))
        report.check("first", True)
        self.assertEqual(report.verdict, PASS)
        other = Report("child")
        other.check("second", False, "off by one")
        other.add("value", np.float64(2.5))
        self.assertFalse(report.extend(other))
        self.assertEqual(report.verdict, FAIL)
        self.assertEqual([f["name"] for f in report.failures], ["child/second"])
        data = json.loads(report.to_json())
        self.assertEqual(data["statistics"], {"mean": "1/3", "child/value": 2.5})
        self.assertEqual(data["verdict"], FAIL)
        informational = Report("growth", informational=True)
        informational.check("slope", False)
        self.assertEqual(informational.verdict, INFO)

    def test_moment_report(self):
        moment = MomentReport("x", [1, 2, 3, 4], exact_mean=2.5, exact_variance=1.25)
        self.assertEqual(moment.z, 0.0)
        self.assertTrue(moment.passed())
        self.assertAlmostEqual(moment.empirical_variance, 5 / 3)
        moment = MomentReport("x", [1, 1, 1, 1], exact_mean=2.0, exact_variance=0.01)
        self.assertFalse(moment.passed())
        self.assertIsNone(MomentReport("x", [1, 2]).z)

    def test_record_moments(self):
        report = record_moments(TwoParam(2, 3), 500, trials=4000, seed=3)
        self.assertTrue(report.passed)
        self.assertAlmostEqual(float(report.statistics["lower_mean"]),
                               sum(2 / (j + 3) for j in range(2, 501)))

    def test_experiment_limits(self):
        for name in EXPERIMENTS:
            with self.subTest(experiment=name):
                cls = experiment_class(name)
                with self.assertRaises(ResourceError):
                    cls(TwoParam(1, 1), n=10 ** 6, trials=10 ** 4)
                with self.assertRaises(ArgumentError):
                    cls(TwoParam(1, 1), n=1, trials=10)
        with self.assertRaises(ArgumentError):
            experiment_class("shape-convergence")(GeneralParams.parse(1, 1, "tail:1/2"), n=100, trials=10)
        with self.assertRaises(ValueError):
            experiment_class("random-walk")

    def test_small_experiments(self):
        for name in ("poisson-times", "adjacent-pairs", "gaussian-counts", "shape-convergence"):
            with self.subTest(experiment=name):
                report = mc_asymptotics(name, TwoParam(1, 1), n=2000, trials=1500, seed=7)
                if verbose_test():
                    print_with_header(f"Experiment {name}", report.to_json())
                self.assertEqual(report.verdict, PASS, report.failures)

    def test_power_growth_is_informational(self):
        report = mc_asymptotics("power-growth", GeneralParams.parse(1, 1, "tail:1/2"), n=2048, trials=200, seed=1)
        self.assertEqual(report.verdict, INFO)

    def test_exact_suites(self):
        for name in ("identities", "pushforward", "uniformity", "indicators", "dual", "boundary", "errata"):
            with self.subTest(suite=name):
                report = suite_class(name)(SimpleNamespace(max_n=5)).run()
                if verbose_test():
                    print_with_header(f"Suite {name}", report.to_json())
                self.assertTrue(report.passed, report.failures)
        self.assertIn("all", SUITES)
        with self.assertRaises(ValueError):
            get_suite(SimpleNamespace(suite="everything"))


if __name__ == '__main__':
    unittest.main()
