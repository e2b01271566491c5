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
from abc import ABC, abstractmethod

from ..reports import Report, MomentReport, Z_THRESHOLD
from ...errors import ResourceError, ArgumentError
from ...exact.params import TwoParam, as_general
from ...samplers.batch import run_records_batch
from ...samplers.rng import check_seed
from ...tracers import PYCOPERM_EXPERIMENT_EVENT, PYCOPERM_OPS_EVENT, PYCOPERM_OPS_BATCH

# Positions simulated over all the trials of one experiment
MC_BUDGET = 2 * 10 ** 9


class Experiment(ABC):
    """
    Monte Carlo experiment base class

    Parameters
    ----------
    params : TwoParam or GeneralParams
    n : int, optional
        Permutation size, default_n when not given.
    trials : int, optional
        Number of simulated permutations, default_trials when not given.
    seed : int
    jobs : int
    comm : mpi4py communicator, optional
    progress : bool
    tracer : Tracer, optional
    """

    name = "experiment"
    default_n = 10 ** 4
    default_trials = 2000
    informational = False
    # Record values are tracked, so the two-parameter law is needed
    needs_two_param = False

    def __init__(self, params, n=None, trials=None, seed=0, jobs=1, comm=None, progress=False, tracer=None):
        self.params = params
        self.n = int(n or self.default_n)
        self.trials = int(trials or self.default_trials)
        self.seed = check_seed(seed)
        self.jobs = jobs or 1
        self.comm = comm
        self.progress = progress
        self.tracer = tracer
        if self.n < 2 or self.trials < 2:
            raise ArgumentError(f"Experiment '{self.name}' needs n >= 2 and at least 2 trials.")
        if self.n * self.trials > MC_BUDGET:
            raise ResourceError(f"n * trials = {self.n * self.trials} exceeds the Monte Carlo budget {MC_BUDGET}.")
        if self.needs_two_param and not isinstance(params, TwoParam):
            general = as_general(params)
            if not general.is_two_param:
                raise ArgumentError(f"Experiment '{self.name}' needs the two-parameter law.")
            self.params = general.to_two_param()

    def emit(self, event_type, value):
        if self.tracer is not None:
            self.tracer.emit_event(event_type, value)

    def batch(self, **options):
        self.emit(PYCOPERM_OPS_EVENT, PYCOPERM_OPS_BATCH)
        result = run_records_batch(self.params, self.n, self.trials, self.seed, jobs=self.jobs, comm=self.comm,
                                   progress=self.progress, **options)
        self.emit(PYCOPERM_OPS_EVENT, 0)
        return result

    def run(self):
        report = Report(self.name, self.params, self.n, self.trials, self.seed, self.informational)
        if self.tracer is not None:
            self.emit(PYCOPERM_EXPERIMENT_EVENT, self.tracer.experiment_event(self.name))
        self.measure(report)
        self.emit(PYCOPERM_EXPERIMENT_EVENT, 0)
        return report

    @abstractmethod
    def measure(self, report):
        """Simulates and adds the statistics and checks to report."""
        pass

    @staticmethod
    def check_moment(report, moment, name=None):
        """Adds a MomentReport and its 4 SE check."""
        name = name or moment.name
        report.add(name, moment)
        return report.check(f"{name} mean within {Z_THRESHOLD:g} SE of {moment.exact_mean:.6g}", moment.passed(),
                            f"z={moment.z:.3f}")

    @staticmethod
    def check_variance(report, name, sample, variance):
        """
        Empirical variance against an exact one, the standard error of the
        sample variance being taken as sqrt((2 v^2 + v) / T), its Poisson value.
        """
        moment = MomentReport(name, sample)
        error = math.sqrt((2 * variance ** 2 + variance) / moment.trials)
        z = (moment.empirical_variance - variance) / error if error else 0.0
        report.add(f"{name}_variance", {"empirical": moment.empirical_variance, "exact": variance, "z": z})
        return report.check(f"{name} variance within {Z_THRESHOLD:g} SE of {variance:.6g}", abs(z) <= Z_THRESHOLD,
                            f"z={z:.3f}")
