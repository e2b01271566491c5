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
Record times in [a n, n]

The numbers of lower and upper record times in [a n, n] converge to
independent Poisson(theta ln(1/a)) and Poisson(zeta ln(1/a)) variables. At
finite n they are Poisson-binomial, with exact mean and variance.
"""

import math

from .experiment import Experiment
from ..reports import MomentReport
from ...exact.moments import count_mean, count_variance


class PoissonTimes(Experiment):

    name = "poisson-times"
    default_n = 10 ** 5

    def __init__(self, params, start_fraction=0.1, **kwargs):
        super().__init__(params, **kwargs)
        self.start_fraction = start_fraction

    def measure(self, report):
        start = max(2, math.ceil(self.start_fraction * self.n))
        batch = self.batch(late_start=start)
        report.add("start", start)
        for side, weight, sample in (("lower", self.params.theta, batch.late_lower),
                                     ("upper", self.params.zeta, batch.late_upper)):
            mean = count_mean(self.params, self.n, side, start)
            variance = count_variance(self.params, self.n, side, start)
            report.add(f"{side}_limit_mean", float(weight) * math.log(1 / self.start_fraction))
            self.check_moment(report, MomentReport(f"{side} times", sample, mean, variance))
            self.check_variance(report, f"{side} times", sample, float(variance))
