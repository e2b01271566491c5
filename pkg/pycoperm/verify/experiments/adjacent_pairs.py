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
Adjacent lower record times j, j+1

Their number has the finite-n mean theta^2 (1/(theta+zeta) - 1/(theta+zeta+n-2))
and converges to a mixed Poisson(theta rho_0) variable, whose variance is
theta E[rho_0] + theta^2 Var(rho_0).
"""

from .experiment import Experiment
from ..reports import MomentReport
from ...exact.moments import adjacent_lower_pairs_mean, center_mean, center_variance


class AdjacentPairs(Experiment):

    name = "adjacent-pairs"
    default_n = 10 ** 5

    def measure(self, report):
        batch = self.batch()
        theta = self.params.theta
        report.add("limit_mean", theta * center_mean(self.params))
        report.add("limit_variance", theta * center_mean(self.params) + theta ** 2 * center_variance(self.params))
        moment = MomentReport("adjacent lower pairs", batch.lower_pairs,
                              adjacent_lower_pairs_mean(self.params, self.n))
        report.add("empirical_variance", moment.empirical_variance)
        self.check_moment(report, moment)
