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
Gaussian record counts

(l - E l) / sd(l) and (u - E u) / sd(u) tend to independent standard normal
variables. The means, the third and fourth standardized moments and the
correlation are compared with their exact finite-n values; the distance of
the correlation to its zero limit is reported.
"""

import math

import numpy as np
from scipy import stats

from .experiment import Experiment
from ..reports import MomentReport, Z_THRESHOLD
from ...exact.moments import count_mean, count_variance, standardized_shape, count_correlation


class GaussianCounts(Experiment):

    name = "gaussian-counts"
    default_n = 10 ** 5

    def measure(self, report):
        batch = self.batch()
        trials = batch.trials
        standardized = {}
        for side, sample in (("lower", batch.lower_count), ("upper", batch.upper_count)):
            mean, variance = count_mean(self.params, self.n, side), count_variance(self.params, self.n, side)
            self.check_moment(report, MomentReport(f"{side} count", sample, mean, variance))
            z = (sample - float(mean)) / math.sqrt(float(variance))
            standardized[side] = z
            skewness, kurtosis = standardized_shape(self.params, self.n, side)
            empirical_skewness = float(stats.skew(z))
            empirical_kurtosis = float(stats.kurtosis(z))
            report.add(f"{side}_skewness", {"empirical": empirical_skewness, "exact": skewness})
            report.add(f"{side}_kurtosis", {"empirical": empirical_kurtosis, "exact": kurtosis})
            report.check(f"{side} skewness within {Z_THRESHOLD:g} SE",
                         abs(empirical_skewness - skewness) <= Z_THRESHOLD * math.sqrt(6 / trials))
            report.check(f"{side} excess kurtosis within {Z_THRESHOLD:g} SE",
                         abs(empirical_kurtosis - kurtosis) <= Z_THRESHOLD * math.sqrt(24 / trials))
        correlation = float(np.corrcoef(standardized["lower"], standardized["upper"])[0, 1])
        exact = count_correlation(self.params, self.n)
        error = 1 / math.sqrt(trials)
        report.add("correlation", {"empirical": correlation, "exact": exact, "z_from_zero": correlation / error})
        report.check(f"correlation within {Z_THRESHOLD:g} SE of {exact:.4f}",
                     abs(correlation - exact) <= Z_THRESHOLD * error, f"z={(correlation - exact) / error:.3f}")
