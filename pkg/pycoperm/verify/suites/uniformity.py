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
Conditional uniformity of the exact tables, the equal-parameter sufficiency
of l+u and the exact symmetries of the two-parameter family.
"""

from .suite import Suite
from .pushforward import expected_uniformity
from ..symmetries import check_ewens_symmetries, check_complement_swap
from ..uniformity import check_conditional_uniformity
from ...exact import TwoParam, GeneralParams, TwoParamLaw, GeneralLaw, pushforward_table

UNIFORMITY_GRID = (TwoParam(1, 1), TwoParam(2, 3), TwoParam(3, 1), TwoParam(1, "1/2"), TwoParam("5/2", "5/2"))
GENERAL_GRID = (GeneralParams(2, 1, tail="1/2"), GeneralParams(1, 3, {-2: "1/3", 1: "-1/2"}))
NEGATIVE_CONTROL = GeneralParams(1, 1, tail="1/2")
SYMMETRY_MAX_N = 6


class UniformitySuite(Suite):

    name = "uniformity"
    default_max_n = 7

    def checks(self, report):
        for params in UNIFORMITY_GRID:
            for n in self.sizes(3):
                table = pushforward_table(n, TwoParamLaw(params), self.jobs, self.comm)
                for stat, expected in expected_uniformity(params).items():
                    uniform, _ = check_conditional_uniformity(table, stat)
                    report.check(f"two-param({params.theta},{params.zeta}) n={n} uniform given {stat} "
                                 f"is {expected}", uniform == expected)
        for params in GENERAL_GRID:
            for n in self.sizes(3):
                table = pushforward_table(n, GeneralLaw(params), self.jobs, self.comm)
                uniform, _ = check_conditional_uniformity(table, "rec")
                report.check(f"general {params.to_dict()} n={n} uniform given rec", uniform)
        if self.max_n >= 4:
            table = pushforward_table(self.max_n, GeneralLaw(NEGATIVE_CONTROL), self.jobs, self.comm)
            uniform, control = check_conditional_uniformity(table, "(l,u)")
            report.add("negative_control_nonuniform_fibers", len(control.statistics["nonuniform_fibers"]))
            report.check("negative control: alpha tail 1/2 is not uniform given (l,u)", not uniform)
        for theta in (1, 2, "1/2"):
            for n in self.sizes(2, SYMMETRY_MAX_N):
                _, symmetries = check_ewens_symmetries(theta, n, self.jobs, self.comm)
                report.extend(symmetries, f"ewens[theta={theta},n={n}]")
        for params in (TwoParam(2, 3), TwoParam("1/2", 1)):
            for n in self.sizes(2, SYMMETRY_MAX_N):
                _, swap = check_complement_swap(params, n, self.jobs, self.comm)
                report.extend(swap, f"complement[{params.theta},{params.zeta},n={n}]")
