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
Scaled record values r_k / n against the stick-breaking shape: the mean of
every tracked r_k / n approaches E[rho_k] and the variance of the scaled
center approaches the beta(theta, zeta) variance.
"""

import numpy as np

from .experiment import Experiment
from ..reports import MomentReport
from ...exact.moments import shape_mean, center_variance


class ShapeConvergence(Experiment):

    name = "shape-convergence"
    default_n = 10 ** 5
    needs_two_param = True

    def __init__(self, params, depth=2, **kwargs):
        super().__init__(params, **kwargs)
        self.depth = depth

    def measure(self, report):
        batch = self.batch(depth=self.depth)
        for k in range(-self.depth, self.depth + 1):
            column = batch.record_value(k)
            present = column > 0
            report.add(f"missing[{k}]", float(1 - present.mean()))
            if present.sum() < 2:
                continue
            moment = MomentReport(f"r_{k}/n", column[present] / self.n, shape_mean(self.params, k))
            self.check_moment(report, moment)
        center = batch.center() / self.n
        report.add("center_variance", {"empirical": float(np.var(center, ddof=1)),
                                       "limit": float(center_variance(self.params))})
