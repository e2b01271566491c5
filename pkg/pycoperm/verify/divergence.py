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

from collections import Counter

import numpy as np
from scipy import stats

from .reports import DivergenceReport
from ..errors import ArgumentError

MIN_EXPECTED = 5.0


def pooled_chisquare(observed, expected):
    """
    Chi-square test after merging the cells with an expected count below
    MIN_EXPECTED into a single cell. An observation in a cell of zero
    expected count rejects outright.
    """
    observed = np.asarray(observed, dtype=np.float64)
    expected = np.asarray(expected, dtype=np.float64)
    if np.any((expected == 0) & (observed > 0)):
        return np.inf, max(1, int(np.count_nonzero(expected)) - 1), 0.0
    keep = expected >= MIN_EXPECTED
    obs = list(observed[keep])
    exp = list(expected[keep])
    small = ~keep & (expected > 0)
    if np.any(small):
        obs.append(observed[small].sum())
        exp.append(expected[small].sum())
    if len(exp) < 2:
        return 0.0, 1, 1.0
    obs, exp = np.array(obs), np.array(exp)
    # chisquare wants equal totals; they already agree up to rounding
    exp *= obs.sum() / exp.sum()
    statistic, p_value = stats.chisquare(obs, exp)
    return float(statistic), len(exp) - 1, float(p_value)


def compare_exact_empirical(table, samples):
    """
    TV distance and chi-square test of samples against an exact DistTable.

    Parameters
    ----------
    table : DistTable
    samples : iterable of Permutation
        Every sample must be a permutation of [table.n].
    """
    counts = Counter(samples)
    size = sum(counts.values())
    if size == 0:
        raise ArgumentError("At least one sample is needed.")
    for p in counts:
        if p.n != table.n:
            raise ArgumentError(f"Sample {p} does not belong to S_{table.n}.")
    support = set(table.probabilities) | set(counts)
    cells = sorted(support, key=lambda p: p.values)
    exact = np.array([float(table[p]) for p in cells])
    observed = np.array([counts.get(p, 0) for p in cells], dtype=np.float64)
    tv = 0.5 * np.abs(observed / size - exact).sum()
    statistic, dof, p_value = pooled_chisquare(observed, exact * size)
    return DivergenceReport(tv, statistic, dof, p_value, size)


def compare_uniform(samples, size):
    """
    Same comparison against the uniform law on a class of the given size,
    without listing the class: unseen members all count as empty cells.
    """
    counts = Counter(samples)
    total = sum(counts.values())
    if total == 0:
        raise ArgumentError("At least one sample is needed.")
    if len(counts) > size:
        raise ArgumentError(f"{len(counts)} distinct samples in a class of size {size}.")
    expected = total / size
    observed = np.array(list(counts.values()), dtype=np.float64)
    unseen = size - len(counts)
    tv = 0.5 * (np.abs(observed / total - 1 / size).sum() + unseen / size)
    if expected >= MIN_EXPECTED:
        statistic = ((observed - expected) ** 2).sum() / expected + unseen * expected
        dof = size - 1
        p_value = float(stats.chi2.sf(statistic, dof))
    else:
        cells = np.concatenate([observed, np.zeros(unseen)])
        statistic, dof, p_value = pooled_chisquare(cells, np.full(size, expected))
    return DivergenceReport(tv, statistic, dof, p_value, total)
