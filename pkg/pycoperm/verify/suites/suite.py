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

import time
from abc import ABC, abstractmethod

from .. import reports
from ...tracers import PYCOPERM_SUITE_EVENT
from ...utils import log


class Suite(ABC):
    """
    Suite base class

    A suite groups named checks into one Report. Options are read from any
    object with the command line attributes (max_n, trials, seed, jobs, comm,
    progress and tracer); missing ones fall back to the suite defaults.
    """

    name = "suite"
    default_max_n = 7
    default_trials = 0
    # Statistical suites draw samples and report their seed and trials
    statistical = False

    def __init__(self, config=None):
        self.max_n = getattr(config, "max_n", None) or self.default_max_n
        self.trials = getattr(config, "trials", None) or self.default_trials
        seed = getattr(config, "seed", None)
        self.seed = 0 if seed is None else seed
        self.jobs = getattr(config, "jobs", None) or 1
        self.comm = getattr(config, "comm", None)
        self.progress = bool(getattr(config, "progress", False))
        self.tracer = getattr(config, "tracer", None)
        self.verbose = bool(getattr(config, "verbose", False))

    def run(self):
        report = reports.Report(self.name, n=self.max_n,
                                trials=self.trials if self.statistical else None,
                                seed=self.seed if self.statistical else None)
        if self.tracer is not None:
            self.tracer.emit_event(PYCOPERM_SUITE_EVENT, self.tracer.suite_event(self.name))
        tic = time.perf_counter()
        self.checks(report)
        toc = time.perf_counter()
        if self.tracer is not None:
            self.tracer.emit_event(PYCOPERM_SUITE_EVENT, 0)
            self.tracer.print_memory_usage(f"suite {self.name}")
        if self.verbose:
            log(f"Suite '{self.name}': {len(report.checks)} checks, {len(report.failures)} failed, "
                f"{toc - tic:.2f} s")
        return report

    @abstractmethod
    def checks(self, report):
        """Adds the checks and statistics of the suite to report."""
        pass

    def sizes(self, low=1, high=None):
        """Sizes low..min(high, max_n)."""
        top = self.max_n if high is None else min(high, self.max_n)
        return range(low, top + 1)
