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
Dual recursion of the per-permutation weights w_n(l, u)
"""

from fractions import Fraction

from .suite import Suite
from ...exact import TwoParam, GeneralParams, TwoParamLaw, w_table, w_table_from_tables, check_dual, \
    dual_defects, pushforward_table

DUAL_VALUES = ("1/2", 1, 2, 3)
TABLE_MAX_N = 6


class DualSuite(Suite):

    name = "dual"
    default_max_n = 9

    def checks(self, report):
        failed_weight, holding_mass = [], []
        for theta in DUAL_VALUES:
            for zeta in DUAL_VALUES:
                w = w_table(TwoParam(theta, zeta), self.max_n)
                if not check_dual(w):
                    failed_weight.append(f"({theta},{zeta})")
                if self.max_n >= 2 and check_dual(w, "mass"):
                    holding_mass.append(f"({theta},{zeta})")
        report.check("two-param weights satisfy the dual recursion", not failed_weight,
                     ", ".join(failed_weight) or None)
        report.check("two-param class masses do not satisfy it", not holding_mass,
                     ", ".join(holding_mass) or None)

        uniform = w_table(TwoParam(1, 1), max(self.max_n, 3))
        report.add("uniform_mass_3_1_1", uniform.mass[(3, 1, 1)])
        report.check("uniform mass w_3(1,1) is 1/3", uniform.mass[(3, 1, 1)] == Fraction(1, 3))

        for params in (TwoParam(1, 1), TwoParam(2, 3)):
            tables = [pushforward_table(n, TwoParamLaw(params), self.jobs, self.comm)
                      for n in self.sizes(high=TABLE_MAX_N)]
            from_tables = w_table_from_tables(tables)
            closed = w_table(params, from_tables.n_max)
            report.check(f"({params.theta},{params.zeta}) weights from tables equal the closed form",
                         from_tables.weight == closed.weight and from_tables.mass == closed.mass)

        general = w_table(GeneralParams(1, 1, tail="1/2"), min(self.max_n, 7))
        report.add("general_dual_defects", len(dual_defects(general)))
