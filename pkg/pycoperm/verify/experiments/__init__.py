"""
PyCoPerm Monte Carlo experiments

If you want to add a new experiment:
    1) create a new Python file in this directory,
    2) define your experiment class as derived from Experiment,
    3) add a lowercase alias on this file and its name to EXPERIMENTS.
"""

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

import importlib

from .adjacent_pairs import AdjacentPairs
from .experiment import Experiment, MC_BUDGET
from .gaussian_counts import GaussianCounts
from .poisson_times import PoissonTimes
from .poisson_values import PoissonValues
from .power_growth import PowerGrowth
from .shape_convergence import ShapeConvergence
from ...utils import get_derived_classes

# Search this module for Experiment derived classes and expose them
get_derived_classes(Experiment, locals())

# Aliases (experiment names with '-' replaced by '_')
shape_convergence = ShapeConvergence
poisson_times = PoissonTimes
poisson_values = PoissonValues
adjacent_pairs = AdjacentPairs
gaussian_counts = GaussianCounts
power_growth = PowerGrowth

EXPERIMENTS = ("shape-convergence", "poisson-times", "poisson-values", "adjacent-pairs", "gaussian-counts",
               "power-growth")


def experiment_class(name):
    experiments_module = importlib.import_module("pycoperm.verify.experiments")
    if name not in EXPERIMENTS:
        raise ValueError(f"Experiment '{name}' not recognized.")
    return getattr(experiments_module, name.replace("-", "_"))


def mc_asymptotics(experiment, params, n=None, trials=None, seed=0, jobs=1, comm=None, progress=False,
                   tracer=None):
    """Runs the named Monte Carlo experiment and returns its Report."""
    _experiment = experiment_class(experiment)
    return _experiment(params, n=n, trials=trials, seed=seed, jobs=jobs, comm=comm, progress=progress,
                       tracer=tracer).run()


def get_experiment(config):
    """Get experiment object from config attributes"""
    _experiment = experiment_class(config.experiment)
    params = config.general_params() if config.alpha else config.two_param()
    return _experiment(params, n=config.n, trials=config.trials, seed=config.seed, jobs=config.jobs,
                       comm=config.comm, progress=config.progress, tracer=config.tracer)
