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
Verification reports

Every check ends up in a Report: the experiment or suite name, the parameters,
the named statistics computed and the boolean checks made on them. Reports
serialize to JSON with exact rationals written as 'num/den'.
"""

import json
import math
from fractions import Fraction

import numpy as np

from ..records import to_initial_ranks, Permutation
from ..utils import format_rational

PASS, FAIL, INFO = "pass", "fail", "info"
Z_THRESHOLD = 4.0
SIGNIFICANCE = 1e-3


def plain(value):
    """Converts a statistic to a JSON friendly value."""
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        value = float(value)
        return value if math.isfinite(value) else str(value)
    if isinstance(value, dict):
        return {str(k): plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, np.ndarray)):
        return [plain(v) for v in value]
    if hasattr(value, "to_dict"):
        return plain(value.to_dict())
    return str(value)


class DivergenceReport:
    """Total variation and chi-square comparison of an empirical law with an exact table."""

    def __init__(self, tv, chi2, dof, p_value, sample_size):
        self.tv = float(tv)
        self.chi2 = float(chi2)
        self.dof = max(1, int(dof))
        self.p_value = float(p_value)
        self.sample_size = int(sample_size)

    def tv_bound(self, n):
        """3 sqrt(n! / N)"""
        return 3 * math.sqrt(math.factorial(n) / self.sample_size)

    def passed(self, n=None, significance=SIGNIFICANCE):
        ok = self.p_value > significance
        if n is not None:
            ok = ok and self.tv < self.tv_bound(n)
        return ok

    def to_dict(self):
        return {"tv": self.tv, "chi2": self.chi2, "dof": self.dof, "p_value": self.p_value,
                "sample_size": self.sample_size}

    def __repr__(self):
        return f"DivergenceReport(tv={self.tv:.5f}, chi2={self.chi2:.3f}, dof={self.dof}, p={self.p_value:.4g})"


class MomentReport:
    """
    Exact and empirical mean (and variance) of a statistic. The standard error
    uses the exact variance when it is known and the empirical one otherwise.
    """

    def __init__(self, name, sample, exact_mean=None, exact_variance=None):
        sample = np.asarray(sample, dtype=np.float64)
        self.name = name
        self.trials = len(sample)
        self.exact_mean = None if exact_mean is None else float(exact_mean)
        self.exact_variance = None if exact_variance is None else float(exact_variance)
        self.empirical_mean = float(sample.mean())
        self.empirical_variance = float(sample.var(ddof=1)) if self.trials > 1 else 0.0
        variance = self.exact_variance if self.exact_variance is not None else self.empirical_variance
        self.standard_error = math.sqrt(variance / self.trials) if self.trials else math.inf

    @property
    def z(self):
        if self.exact_mean is None:
            return None
        if self.standard_error == 0:
            return 0.0 if self.empirical_mean == self.exact_mean else math.inf
        return (self.empirical_mean - self.exact_mean) / self.standard_error

    def passed(self, threshold=Z_THRESHOLD):
        return self.z is None or abs(self.z) <= threshold

    def to_dict(self):
        return {"name": self.name, "trials": self.trials, "exact_mean": self.exact_mean,
                "exact_variance": self.exact_variance, "empirical_mean": self.empirical_mean,
                "empirical_variance": self.empirical_variance, "standard_error": self.standard_error,
                "z": self.z}


class IndicatorStats:
    """
    Record indicators of one permutation: B_j (position j >= 2 is a proper
    record), the partial sums S_j, the types I_k (1 = lower) of the successive
    records, and the estimates eta = S_n / ln n and p = l / (l + u).
    """

    def __init__(self, indicators, types):
        self.indicators = list(indicators)
        self.types = list(types)

    @classmethod
    def from_ranks(cls, ranks):
        ranks = list(ranks)
        indicators, types = [], []
        for j, i in enumerate(ranks[1:], start=2):
            is_record = i == 1 or i == j
            indicators.append(int(is_record))
            if is_record:
                types.append(int(i == 1))
        return cls(indicators, types)

    @classmethod
    def from_permutation(cls, p):
        return cls.from_ranks(to_initial_ranks(p if isinstance(p, Permutation) else Permutation(p)).ranks)

    @property
    def n(self):
        return len(self.indicators) + 1

    @property
    def partial_sums(self):
        return list(np.cumsum(self.indicators)) if self.indicators else []

    @property
    def total(self):
        return sum(self.indicators)

    @property
    def lower_count(self):
        return sum(self.types)

    @property
    def upper_count(self):
        return len(self.types) - sum(self.types)

    @property
    def eta(self):
        return self.total / math.log(self.n) if self.n > 1 else None

    @property
    def p(self):
        return self.lower_count / len(self.types) if self.types else None


class Report:
    """
    Outcome of a suite, an experiment or a single check.

    informational reports keep their statistics but have the 'info' verdict
    whatever their checks say.
    """

    def __init__(self, experiment, params=None, n=None, trials=None, seed=None, informational=False):
        self.experiment = experiment
        self.params = params
        self.n = n
        self.trials = trials
        self.seed = seed
        self.informational = informational
        self.statistics = {}
        self.checks = []

    def add(self, name, value):
        self.statistics[name] = value
        return value

    def check(self, name, passed, detail=None):
        self.checks.append({"name": name, "passed": bool(passed), "detail": detail})
        return bool(passed)

    def extend(self, other, prefix=None):
        """Merges the checks and statistics of another report."""
        prefix = f"{prefix or other.experiment}/"
        for check in other.checks:
            self.checks.append({**check, "name": prefix + check["name"]})
        for name, value in other.statistics.items():
            self.statistics[prefix + name] = value
        return other.passed

    @property
    def passed(self):
        return all(check["passed"] for check in self.checks)

    @property
    def failures(self):
        return [check for check in self.checks if not check["passed"]]

    @property
    def verdict(self):
        if self.informational:
            return INFO
        return PASS if self.passed else FAIL

    def to_dict(self):
        params = self.params.to_dict() if hasattr(self.params, "to_dict") else self.params
        return {"experiment": self.experiment, "params": plain(params), "n": self.n, "trials": self.trials,
                "seed": self.seed, "statistics": plain(self.statistics), "checks": plain(self.checks),
                "verdict": self.verdict}

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2)

    def __repr__(self):
        return f"Report({self.experiment}, {len(self.checks)} checks, {self.verdict})"
