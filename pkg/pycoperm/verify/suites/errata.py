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
Documented discrepancies between printed formulas and the exact model

Every entry reproduces the failure of the printed form on a witness and checks
that the corrected form holds. The witnesses are stored as statistics so that
'verify --suite errata' shows them.
"""

from fractions import Fraction

from .suite import Suite
from ...exact import TwoParam, GeneralParams, TwoParamLaw, PyramidLaw, ShapeLaw, pushforward_table, pe_pmf, \
    pe_pmf_printed, pe_law, literal_step_law, step_law, compare_closed_forms, equal_param_probability, \
    equal_param_probability_printed, record_chain_step, record_chain_step_printed, LOWER, UPPER, d_count, \
    phi_boundary, permutation_weight_from_shape, w_table, check_dual
from ...records import Permutation, CenteredComposition, extract_records
from ...samplers.shape import TwoSidedShape

PE_MAX_N = 8
PHI_SHAPE = TwoSidedShape([0.02, 0.05, 0.1, 0.4, 0.7, 0.9, 0.95], 3)
TOLERANCE = 1e-12


def greater_equal_ranks(p):
    """Initial ranks counted with >=, the printed convention."""
    return [sum(1 for w in p.values[:j] if w >= v) for j, v in enumerate(p.values, start=1)]


class ErrataSuite(Suite):

    name = "errata"
    default_max_n = PE_MAX_N

    def checks(self, report):
        self.pe_display(report)
        self.literal_step_law(report)
        self.closed_form(report)
        self.equal_parameter_normalizer(report)
        self.record_chain(report)
        self.phi_class_sum(report)
        self.dual_on_masses(report)
        self.pyramid_labelling(report)
        self.rank_convention(report)

    def pe_display(self, report):
        params = (1, 1)
        printed = sum(pe_pmf_printed(3, params, r) for r in range(1, 4))
        report.add("pe_printed_sum[3,1,1]", printed)
        report.check("printed Polya-Eggenberger display does not normalize at (3,1,1)", printed != 1)
        params = TwoParam(2, 3)
        bad = [n for n in self.sizes(high=PE_MAX_N)
               if pushforward_table(n, TwoParamLaw(params), self.jobs, self.comm).marginal(lambda p: p[0])
               != pe_law(n, params)]
        report.check("corrected form is the center law of two-param(2,3)", not bad, f"n in {bad}" if bad else None)
        report.check("corrected form is 1/n at theta = zeta = 1",
                     all(pe_pmf(n, (1, 1), r) == Fraction(1, n) for n in self.sizes() for r in range(1, n + 1)))

    def literal_step_law(self, report):
        params = GeneralParams(1, 1, {1: "1/2"})
        state = extract_records(Permutation([1, 3, 2]))
        literal = sum(literal_step_law(state, 4, params).values())
        report.add("literal_step_law_sum[(1,3,2)]", literal)
        report.check("literal per-rank law sums to (theta+zeta+2-alpha_1)/(theta+zeta+2) on (1,3,2)",
                     literal == Fraction(7, 8))
        report.check("gap-level law sums to 1 on (1,3,2)", sum(step_law(state, 4, params).values()) == 1)

    def closed_form(self, report):
        zero = compare_closed_forms(Permutation([1, 4, 2, 3]), GeneralParams(2, 3))
        report.add("closed_form[(1,4,2,3), alpha=0]", zero)
        report.check("printed form exceeds the path product by prod (lambda_k - 1)! at alpha = 0",
                     zero["ratio"] == zero["factorials"] == 2 and zero["closed"] == zero["path"])
        shifted = compare_closed_forms(Permutation([1, 2, 3]), GeneralParams(1, 1, {1: "1/2"}))
        report.add("closed_form[(1,2,3), alpha_1=1/2]", shifted)
        report.check("printed record weights are shifted by one index",
                     shifted["factorials"] == 1 and shifted["ratio"] == Fraction(3, 2)
                     and shifted["closed"] == shifted["path"])

    def equal_parameter_normalizer(self, report):
        n, theta = 4, 2
        perms = list(Permutation.all(n))
        printed = sum(equal_param_probability_printed(p, theta) for p in perms)
        report.add("equal_parameter_printed_sum[n=4,theta=2]", printed)
        report.check("(2 theta)_(n+1) normalizer does not sum to 1", printed != 1)
        report.check("(2 theta)_(n-1) normalizer sums to 1", sum(equal_param_probability(p, theta) for p in perms) == 1)

    def record_chain(self, report):
        r, n, params = 3, 5, (1, 1)
        printed = record_chain_step_printed(r, n, params, LOWER)
        outside = sum(q for v, q in printed.items() if not 1 <= v <= n)
        report.add("printed_chain_row[r=3,n=5,lower]", printed)
        report.check("printed record chain puts mass outside [1, n]", outside > 0)
        rows = [(m, record_chain_step(r, m, params, side)) for m in range(1, 9) for r in range(1, m + 1)
                for side in (LOWER, UPPER)]
        report.check("corrected record chain rows sum to 1 inside [1, n]",
                     all(sum(row.values()) == 1 and all(1 <= v <= m for v in row) for m, row in rows))

    def phi_class_sum(self, report):
        composition = CenteredComposition.parse("^1,3")
        table = pushforward_table(composition.degree, ShapeLaw(PHI_SHAPE), self.jobs, self.comm)
        mass = float(sum((q for p, q in table.probabilities.items()
                          if extract_records(p).composition() == composition), Fraction(0)))
        phi = phi_boundary(composition, PHI_SHAPE)
        size = d_count(composition)
        report.add("phi[^1,3]", phi)
        report.add("class_mass[^1,3]", mass)
        report.check("d_count times phi exceeds the class mass", abs(size * phi - mass) > 1e-6)
        report.check("d_count times phi / prod (lambda_k - 1)! is the class mass",
                     abs(size * permutation_weight_from_shape(composition, PHI_SHAPE) - mass) < TOLERANCE)

    def dual_on_masses(self, report):
        w = w_table(TwoParam(1, 1), 3)
        recursion = w.mass[(3, 2, 0)] + w.mass[(3, 1, 1)] + w.mass[(3, 1, 0)]
        report.add("mass_w2(1,0)", w.mass[(2, 1, 0)])
        report.add("mass_recursion_w2(1,0)", recursion)
        report.check("class masses break the dual recursion", recursion != w.mass[(2, 1, 0)]
                     and not check_dual(w, "mass"))
        report.check("weights satisfy it", check_dual(w))

    def pyramid_labelling(self, report):
        n = 4
        lower = pushforward_table(n, PyramidLaw(1), self.jobs, self.comm)
        upper = pushforward_table(n, PyramidLaw(0), self.jobs, self.comm)
        report.add("pyramid_p1", str(lower.items()[0][0]))
        report.check("p = 1 gives (n, ..., 1), so p is the lower record probability",
                     lower[Permutation([4, 3, 2, 1])] == 1 and upper[Permutation([1, 2, 3, 4])] == 1)

    def rank_convention(self, report):
        p = Permutation([3, 2, 7, 6, 1, 4, 8, 5])
        printed = greater_equal_ranks(p)
        ones = [j for j, i in enumerate(printed, start=1) if i == 1]
        profile = extract_records(p)
        lower_times = sorted(profile.time(-k) for k in range(profile.lower_count + 1))
        report.add("printed_ranks", printed)
        report.check("with >= the rank 1 positions are the upper record times, not the lower ones",
                     ones != lower_times and ones == sorted(profile.time(k) for k in range(profile.upper_count + 1)))
        report.check("with <= the rank 1 positions are the lower record times",
                     [j for j, i in enumerate(p.to_initial_ranks(), start=1) if i == 1] == lower_times)
