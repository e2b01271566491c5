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
Vectorized record simulation over many trials

Only the record data is simulated: at step j every trial draws one uniform and
becomes a lower record, an upper record or an inner entry. With general
parameters the total weight of step j is theta + zeta + j - 2 whatever the
composition, so the record counts only need the side weights. Record values
(the first K on each side and the center) are tracked for the two-parameter
law, whose inner ranks are uniform on 2..j-1.
"""

import math

import numpy as np
from tqdm import tqdm

from .rng import get_rng, spawn_seeds
from ..errors import ArgumentError
from ..exact.params import TwoParam, as_general
from ..parallel import map_chunks

BLOCK_TRIALS = 1000


class BatchResult:
    """
    Per-trial arrays.

    lower_count, upper_count : l and u at size n
    late_lower, late_upper : records with time in [late_start, n]
    lower_pairs : positions j with j and j+1 both lower record times
    checkpoints : (trials, len(sizes)) lower counts at the checkpoint sizes
    values : (trials, 2K + 1) record values r_{-K}..r_K at size n, 0 if absent
    """

    fields = ("lower_count", "upper_count", "late_lower", "late_upper", "lower_pairs", "values", "checkpoints")

    def __init__(self, n, depth, **arrays):
        self.n = n
        self.depth = depth
        for name in self.fields:
            setattr(self, name, arrays.get(name))

    @property
    def trials(self):
        return len(self.lower_count)

    def center(self):
        return self.values[:, self.depth]

    def record_value(self, k):
        """Column of r_k, k in [-K, K]."""
        if not -self.depth <= k <= self.depth:
            raise ArgumentError(f"Record value r_{k} was not tracked (K={self.depth}).")
        return self.values[:, self.depth + k]

    @classmethod
    def concatenate(cls, results):
        first = results[0]
        arrays = {}
        for name in cls.fields:
            parts = [getattr(r, name) for r in results]
            arrays[name] = None if parts[0] is None else np.concatenate(parts)
        return cls(first.n, first.depth, **arrays)


def _side_tables(params, n):
    general = as_general(params)
    lower = np.empty(n + 1)
    upper = np.empty(n + 1)
    lower[0], upper[0] = float(general.theta), float(general.zeta)
    for m in range(1, n + 1):
        lower[m] = lower[m - 1] + float(general(-m))
        upper[m] = upper[m - 1] + float(general(m))
    return lower, upper


def records_batch(params, n, trials, rng, depth=0, late_start=None, checkpoints=(), progress=False):
    """
    Simulates the record data of trials independent permutations of size n.

    Parameters
    ----------
    params : TwoParam or GeneralParams
    depth : int
        Number K of record values tracked on each side (two-parameter law only).
    late_start : int, optional
        First position counted by late_lower and late_upper.
    checkpoints : sequence of int
        Sizes at which the lower record counts are stored.
    """
    if depth > 0 and not (isinstance(params, TwoParam) or as_general(params).is_two_param):
        raise ArgumentError("Record values can only be tracked under the two-parameter law.")
    rng = get_rng(rng)
    lower_w, upper_w = _side_tables(params, n)
    theta, zeta = lower_w[0], upper_w[0]
    l = np.zeros(trials, dtype=np.int64)
    u = np.zeros(trials, dtype=np.int64)
    late_l = np.zeros(trials, dtype=np.int64)
    late_u = np.zeros(trials, dtype=np.int64)
    pairs = np.zeros(trials, dtype=np.int64)
    previous = np.zeros(trials, dtype=bool)
    values = np.zeros((trials, 2 * depth + 1), dtype=np.int64)
    values[:, depth] = 1
    rows = np.arange(trials)
    late_start = n + 1 if late_start is None else late_start
    checkpoints = sorted(int(c) for c in checkpoints)
    stored = np.zeros((trials, len(checkpoints)), dtype=np.int64)
    next_checkpoint = 0
    while next_checkpoint < len(checkpoints) and checkpoints[next_checkpoint] <= 1:
        next_checkpoint += 1
    for j in tqdm(range(2, n + 1), disable=not progress, desc="records", leave=False):
        x = rng.random(trials) * (theta + zeta + j - 2)
        w_lower = lower_w[l]
        is_lower = x < w_lower
        is_upper = ~is_lower & (x < w_lower + upper_w[u])
        if depth > 0:
            inner = np.minimum(2 + np.floor(x - theta - zeta).astype(np.int64), j - 1)
            i = np.where(is_lower, 1, np.where(is_upper, j, inner))
            values += values >= i[:, None]
            new = is_lower & (l < depth)
            values[rows[new], depth - 1 - l[new]] = 1
            new = is_upper & (u < depth)
            values[rows[new], depth + 1 + u[new]] = j
        if j >= late_start:
            late_l += is_lower
            late_u += is_upper
        pairs += is_lower & previous
        previous = is_lower
        l += is_lower
        u += is_upper
        while next_checkpoint < len(checkpoints) and checkpoints[next_checkpoint] == j:
            stored[:, next_checkpoint] = l
            next_checkpoint += 1
    return BatchResult(n, depth, lower_count=l, upper_count=u, late_lower=late_l, late_upper=late_u,
                       lower_pairs=pairs, values=values, checkpoints=stored)


def _block(args):
    params, n, trials, seed, depth, late_start, checkpoints, progress = args
    return records_batch(params, n, trials, seed, depth, late_start, checkpoints, progress)


def run_records_batch(params, n, trials, seed, depth=0, late_start=None, checkpoints=(), jobs=1, comm=None,
                      progress=False):
    """
    records_batch over blocks of BLOCK_TRIALS trials, each with a spawned child
    seed, so the result does not depend on jobs or on the number of MPI ranks.
    """
    blocks = max(1, math.ceil(trials / BLOCK_TRIALS))
    sizes = [min(BLOCK_TRIALS, trials - b * BLOCK_TRIALS) for b in range(blocks)]
    chunks = [(params, n, size, child, depth, late_start, tuple(checkpoints), progress)
              for size, child in zip(sizes, spawn_seeds(seed, blocks))]
    return BatchResult.concatenate(map_chunks(_block, chunks, jobs, comm))
