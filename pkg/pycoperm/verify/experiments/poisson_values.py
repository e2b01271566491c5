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
Record values as Poisson processes

Given rho_0, -ln(1 - rho_k), k > 0, is a Poisson process of rate zeta and
-ln(rho_k), k < 0, one of rate theta. Summing the value/duration intensity
zeta x^(j-1) dx over the durations j gives zeta dx / (1 - x), so the number
of upper record values in (a n, b n] of a trial with r_0 < a n has mean
zeta ln((1 - a) / (1 - b)); symmetrically the lower values in [c n, d n) of a
trial with r_0 >= d n have mean theta ln(d / c).
"""

import math

from .experiment import Experiment
from ..reports import MomentReport


class PoissonValues(Experiment):

    name = "poisson-values"
    needs_two_param = True

    def __init__(self, params, depth=24, upper_window=(0.5, 0.9), lower_window=(0.1, 0.5), **kwargs):
        super().__init__(params, **kwargs)
        self.depth = depth
        self.upper_window = upper_window
        self.lower_window = lower_window

    def measure(self, report):
        batch = self.batch(depth=self.depth)
        report.add("truncated", float(((batch.lower_count > self.depth) | (batch.upper_count > self.depth)).mean()))
        center = batch.center()
        upper = batch.values[:, batch.depth + 1:]
        lower = batch.values[:, :batch.depth]

        a, b = self.upper_window
        rows = center < a * self.n
        counts = ((upper > a * self.n) & (upper <= b * self.n)).sum(axis=1)[rows]
        mean = float(self.params.zeta) * math.log((1 - a) / (1 - b))
        self.report_window(report, "upper values", counts, mean)

        c, d = self.lower_window
        rows = center >= d * self.n
        counts = ((lower >= c * self.n) & (lower < d * self.n)).sum(axis=1)[rows]
        mean = float(self.params.theta) * math.log(d / c)
        self.report_window(report, "lower values", counts, mean)

    def report_window(self, report, name, counts, mean):
        report.add(f"{name}_trials", len(counts))
        if len(counts) < 2:
            report.check(f"{name}: enough trials in the window", False, f"{len(counts)} trials")
            return
        moment = MomentReport(name, counts, mean)
        report.add(f"{name}_variance", moment.empirical_variance)
        self.check_moment(report, moment)
