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
Record indicators: independent Q_eta Bernoulli variables, an independent
thinning into lower and upper records and uniform allocations, checked on
exact tables. An alpha-tilted law must break the first property.
"""

from .suite import Suite
from ..indicators import check_indicator_structure
from ...exact import TwoParam, GeneralParams

INDICATOR_GRID = ((TwoParam(1, 1), 7), (TwoParam(3, 1), 6), (TwoParam(2, 3), 6), (TwoParam("1/2", 2), 5))
NEGATIVE_CONTROL = GeneralParams(1, 1, tail="1/2")


class IndicatorsSuite(Suite):

    name = "indicators"
    default_max_n = 7

    def checks(self, report):
        for params, top in INDICATOR_GRID:
            for n in self.sizes(2, top):
                _, structure = check_indicator_structure(params, n, self.jobs, self.comm)
                report.extend(structure, f"({params.theta},{params.zeta}) n={n}")
        n = min(self.max_n, 5)
        if n >= 3:
            _, control = check_indicator_structure(NEGATIVE_CONTROL, n, self.jobs, self.comm)
            independent = control.checks[0]["passed"]
            report.add("negative_control", control.checks)
            report.check(f"negative control: alpha tail 1/2 breaks the Q_eta law at n={n}", not independent)
