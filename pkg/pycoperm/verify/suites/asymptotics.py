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
Asymptotic record statistics at large n

Every experiment gets its own seed derived from the suite seed. The band
check of E[l] / (theta ln n) is done at theta = zeta = 1; for (2, 3) the ratio
converges too slowly to sit in the band at n = 10^4 and it is only reported.
"""

import math

import numpy as np

from .suite import Suite
from ..experiments import ShapeConvergence, PoissonTimes, AdjacentPairs, GaussianCounts
from ..moments import record_moments
from ...exact import TwoParam
from ...samplers import spawn_seeds

MOMENTS_N = 10 ** 4
LARGE_N = 10 ** 5
RATIO_BAND = (0.9, 1.1)


class AsymptoticsSuite(Suite):

    name = "asymptotics"
    default_trials = 2000
    statistical = True

    def __init__(self, config=None):
        super().__init__(config)
        self.n = getattr(config, "n", None)

    def child_seeds(self, count):
        return [int(child.generate_state(1, np.uint64)[0]) for child in spawn_seeds(self.seed, count)]

    def experiment(self, cls, params, n, seed):
        return cls(params, n=self.n or n, trials=self.trials, seed=seed, jobs=self.jobs, comm=self.comm,
                   progress=self.progress, tracer=self.tracer).run()

    def checks(self, report):
        seeds = iter(self.child_seeds(7))
        uniform, skewed = TwoParam(1, 1), TwoParam(2, 3)
        n = self.n or MOMENTS_N

        moments = record_moments(uniform, n, self.trials, next(seeds), self.jobs, self.comm)
        report.extend(moments, "record-moments(1,1)")
        ratio = moments.statistics["lower_log_ratio"]
        report.check(f"E[l] / (theta ln n) in {RATIO_BAND} at (1,1), n={n}",
                     RATIO_BAND[0] < ratio < RATIO_BAND[1], f"ratio={ratio:.4f}")
        slow = record_moments(skewed, n)
        report.add("record-moments(2,3)/lower_log_ratio", slow.statistics["lower_log_ratio"])
        report.add("record-moments(2,3)/upper_log_ratio", slow.statistics["upper_log_ratio"])
        report.add("record-moments(2,3)/log_n", math.log(n))

        for params in (uniform, skewed):
            result = self.experiment(ShapeConvergence, params, LARGE_N, next(seeds))
            report.extend(result, f"shape-convergence({params.theta},{params.zeta})")
        report.extend(self.experiment(PoissonTimes, uniform, LARGE_N, next(seeds)), "poisson-times(1,1)")
        report.extend(self.experiment(AdjacentPairs, skewed, LARGE_N, next(seeds)), "adjacent-pairs(2,3)")
        report.extend(self.experiment(GaussianCounts, uniform, LARGE_N, next(seeds)), "gaussian-counts(1,1)")
