"""
PyCoPerm verification

Exact checks on pushforward tables, empirical-vs-exact comparisons of the
samplers, the verification suites and the Monte Carlo experiments.
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

from .divergence import compare_exact_empirical, compare_uniform, pooled_chisquare, MIN_EXPECTED
from .experiments import Experiment, get_experiment, mc_asymptotics, EXPERIMENTS, MC_BUDGET
from .indicators import check_indicator_structure, indicator_law, q_eta_probability
from .moments import record_moments
from .reports import Report, DivergenceReport, MomentReport, IndicatorStats, PASS, FAIL, INFO, SIGNIFICANCE, \
    Z_THRESHOLD
from .suites import Suite, get_suite, suite_class, SUITES
from .symmetries import check_inverse_records, check_ewens_symmetries, check_complement_swap
from .uniformity import check_conditional_uniformity, get_statistic, STATISTICS
