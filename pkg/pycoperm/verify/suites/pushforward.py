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

"""
Exact pushforward tables: normalization, coherence under restriction,
conditional uniformity, closed forms, the integer window construction and
the Markov chains of the center, the record values and a fixed position.
"""

from collections import defaultdict
from fractions import Fraction

from .suite import Suite
from ..uniformity import check_conditional_uniformity
from ...exact import TwoParam, GeneralParams, TwoParamLaw, GeneralLaw, pushforward_table, \
    window_pushforward_table, perm_probability, equal_param_probability, general_closed_form, d_count, \
    pe_law, pe_pmf, record_chain_step, position_chain_step, LOWER, UPPER
from ...exact.moments import count_mean, count_variance
from ...records import extract_records, restrict
from ...samplers.limit import LimitFamily

TWO_PARAM_GRID = (TwoParam(1, 1), TwoParam(2, 3), TwoParam("1/2", 1), TwoParam(3, 1), TwoParam(1, 2),
                  TwoParam(2, 2))
GENERAL_GRID = (GeneralParams(1, 1, {1: "1/2"}),
                GeneralParams(2, 3, tail="1/3"),
                GeneralParams("1/2", 1, {-1: "-1/4", 2: "1/2"}))
LIMIT_GRID = (LimitFamily("bernoulli-pyramid", "1/3"), LimitFamily("single-record", "1/4"),
              LimitFamily("theta-zero", 2), LimitFamily("zeta-zero", 3))
WINDOW_GRID = ((1, 2), (2, 2), (3, 1))
WINDOW_MAX_N = 5
CHAIN_MAX_N = 6


def _label(params):
    if isinstance(params, TwoParam):
        return f"two-param({params.theta},{params.zeta})"
    if isinstance(params, GeneralParams):
        alpha = ",".join(f"{k}:{v}" for k, v in sorted(params.alpha.items()))
        return f"general({params.theta},{params.zeta};{alpha};{params.tail_lower},{params.tail_upper})"
    return str(params)


def expected_uniformity(params):
    """Statistics whose fibers carry a constant two-param probability (n >= 3)."""
    return {"rec": True, "(l,u)": True, "l": params.zeta == 1, "u": params.theta == 1,
            "l+u": params.theta == params.zeta}


def lower_values(p):
    profile = extract_records(p)
    return tuple(profile.value(-k) for k in range(profile.lower_count + 1))


def upper_values(p):
    profile = extract_records(p)
    return tuple(profile.value(k) for k in range(profile.upper_count + 1))


def chain_probability(sequence, n, params, side):
    """Probability of a record value sequence started from the center law."""
    probability = pe_pmf(n, params, sequence[0])
    for r, following in zip(sequence, sequence[1:]):
        probability *= record_chain_step(r, n, params, side).get(following, 0)
    return probability


class PushforwardSuite(Suite):

    name = "pushforward"
    default_max_n = 7

    def tables(self, law):
        return {n: pushforward_table(n, law, self.jobs, self.comm) for n in self.sizes()}

    def check_common(self, report, label, tables):
        unnormalized = [n for n, t in tables.items() if not t.is_normalized()]
        incoherent = [n for n, t in tables.items() if n > 1 and t.restrict(n - 1) != tables[n - 1]]
        report.check(f"{label} sums to 1", not unnormalized, f"n in {unnormalized}" if unnormalized else None)
        report.check(f"{label} is coherent under restrict", not incoherent,
                     f"n in {incoherent}" if incoherent else None)

    def check_two_param(self, report, params):
        label = _label(params)
        tables = self.tables(TwoParamLaw(params))
        self.check_common(report, label, tables)
        top = tables[self.max_n]
        report.check(f"{label} equals theta^l zeta^u / (theta+zeta)_(n-1)",
                     all(top[p] == perm_probability(p, params) for p in top.probabilities))
        if params.theta == params.zeta:
            report.check(f"{label} equals the equal-parameter form",
                         all(top[p] == equal_param_probability(p, params.theta) for p in top.probabilities))
        if self.max_n >= 3:
            for stat, expected in expected_uniformity(params).items():
                uniform, _ = check_conditional_uniformity(top, stat)
                report.check(f"{label} uniform given {stat} is {expected}", uniform == expected)
        report.check(f"{label} center follows the Polya-Eggenberger law",
                     all(t.marginal(lambda p: p[0]) == pe_law(n, params) for n, t in tables.items()))
        for side in ("lower", "upper"):
            bad = [n for n, t in tables.items() if not self.moments_match(t, params, side)]
            report.check(f"{label} {side} count moments match the exact sums", not bad,
                         f"n in {bad}" if bad else None)
        chain_sizes = [n for n in tables if 2 <= n <= CHAIN_MAX_N]
        for side, values in ((LOWER, lower_values), (UPPER, upper_values)):
            bad = [n for n in chain_sizes
                   if any(q != chain_probability(seq, n, params, side)
                          for seq, q in tables[n].marginal(values).items())]
            report.check(f"{label} {side} record values follow the record chain", not bad,
                         f"n in {bad}" if bad else None)
        bad = [n for n in tables if n >= 3 and not self.position_chain_matches(tables[n], params)]
        report.check(f"{label} first two positions follow the position chain", not bad,
                     f"n in {bad}" if bad else None)
        return tables

    @staticmethod
    def moments_match(table, params, side):
        law = table.marginal(lambda p: getattr(extract_records(p), f"{side}_count"))
        mean = sum((k * q for k, q in law.items()), Fraction(0))
        second = sum((k * k * q for k, q in law.items()), Fraction(0))
        return mean == count_mean(params, table.n, side) and \
            second - mean * mean == count_variance(params, table.n, side)

    @staticmethod
    def position_chain_matches(table, params):
        n = table.n
        for t in (1, 2):
            joint = table.marginal(lambda p: (restrict(p, n - 1)[t - 1], p[t - 1]))
            before = defaultdict(Fraction)
            for (v, _), q in joint.items():
                before[v] += q
            for (v, w), q in joint.items():
                if q / before[v] != position_chain_step(v, n, params).get(w, 0):
                    return False
        return True

    def check_general(self, report, params):
        label = _label(params)
        tables = self.tables(GeneralLaw(params))
        self.check_common(report, label, tables)
        top = tables[self.max_n]
        report.check(f"{label} equals the closed form on every permutation",
                     all(q == general_closed_form(extract_records(p).composition(), params)
                         for p, q in top.probabilities.items()))
        masses = top.marginal(lambda p: extract_records(p).composition())
        report.check(f"{label} class masses are d_count times the closed form",
                     all(q == d_count(c) * general_closed_form(c, params) for c, q in masses.items()))
        uniform, _ = check_conditional_uniformity(top, "rec")
        report.check(f"{label} uniform given rec", uniform)

    def checks(self, report):
        two_param_tables = {}
        for params in TWO_PARAM_GRID:
            two_param_tables[params] = self.check_two_param(report, params)
        for params in GENERAL_GRID:
            self.check_general(report, params)
        for family in LIMIT_GRID:
            self.check_common(report, str(family), self.tables(family.law()))
        for theta, zeta in WINDOW_GRID:
            params = TwoParam(theta, zeta)
            tables = two_param_tables.get(params) or self.tables(TwoParamLaw(params))
            bad = [n for n in self.sizes(high=WINDOW_MAX_N)
                   if window_pushforward_table(n, theta, zeta, self.jobs, self.comm) != tables[n]]
            report.check(f"integer window ({theta},{zeta}) equals two-param({theta},{zeta})", not bad,
                         f"n in {bad}" if bad else None)
        report.add("two_param_grid", [_label(p) for p in TWO_PARAM_GRID])
        report.add("general_grid", [_label(p) for p in GENERAL_GRID])
        report.add("limit_grid", [str(f) for f in LIMIT_GRID])
