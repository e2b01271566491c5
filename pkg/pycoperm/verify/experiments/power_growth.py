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
Power growth of the lower record count

With a constant lower alpha tail a in (0, 1) the lower weight grows linearly
with l, and the lower record count grows like n^a. The log-log slope of the
mean count over a geometric grid of sizes is reported; the report is
informational.
"""

import math

import numpy as np

from .experiment import Experiment
from ...exact.params import as_general


class PowerGrowth(Experiment):

    name = "power-growth"
    informational = True

    def __init__(self, params, points=6, **kwargs):
        super().__init__(params, **kwargs)
        self.points = points

    def sizes(self):
        sizes = sorted({max(2, self.n // 2 ** k) for k in range(self.points)})
        return sizes

    def measure(self, report):
        sizes = self.sizes()
        batch = self.batch(checkpoints=sizes)
        means = batch.checkpoints.mean(axis=0)
        report.add("sizes", sizes)
        report.add("mean_lower_counts", [float(m) for m in means])
        tail = float(as_general(self.params).tail_lower)
        report.add("tail", tail)
        usable = means > 0
        if usable.sum() >= 2:
            slope = float(np.polyfit(np.log(np.array(sizes)[usable]), np.log(means[usable]), 1)[0])
            report.add("slope", slope)
            report.add("slope_minus_tail", slope - tail)
        else:
            report.add("slope", math.nan)
