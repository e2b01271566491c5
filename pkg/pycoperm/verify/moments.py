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

import math

from .reports import Report, MomentReport
from ..exact.moments import count_mean, count_variance
from ..samplers.batch import run_records_batch


def record_moments(params, n, trials=0, seed=0, jobs=1, comm=None):
    """
    Exact mean and variance of l and u under P^(theta, zeta), their ratio to
    theta ln n and zeta ln n, and, when trials > 0, the empirical counterparts
    from the batch simulator.
    """
    report = Report("record-moments", params, n, trials, seed)
    batch = run_records_batch(params, n, trials, seed, jobs=jobs, comm=comm) if trials > 0 else None
    for side, weight in (("lower", params.theta), ("upper", params.zeta)):
        mean = count_mean(params, n, side)
        variance = count_variance(params, n, side)
        report.add(f"{side}_mean", mean)
        report.add(f"{side}_variance", variance)
        if n > 1:
            report.add(f"{side}_log_ratio", float(mean) / (float(weight) * math.log(n)))
        if batch is not None:
            sample = batch.lower_count if side == "lower" else batch.upper_count
            moment = MomentReport(f"{side} count", sample, mean, variance)
            report.add(f"{side}_empirical", moment)
            report.check(f"{side} count mean within 4 SE", moment.passed(), f"z={moment.z:.3f}")
    return report
