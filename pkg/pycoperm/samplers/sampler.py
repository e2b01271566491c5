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

from abc import ABC, abstractmethod

import numpy as np
from tqdm import tqdm

from .rng import get_rng
from ..errors import ArgumentError
from ..exact.enumeration import pushforward_table
from ..exact.laws import ROOT
from ..records import from_initial_ranks, InitialRanks

# Largest size drawn in grouped batches, the number of compositions grows as 2^n
BATCH_MAX_N = 12


class Sampler(ABC):
    """
    Sampler abstract base class

    Derived classes draw one permutation of [n] from a generator. Every draw
    consumes the generator in a fixed order, so a seed determines the output.
    """

    name = "sampler"

    @abstractmethod
    def draw(self, n, rng):
        """Returns a Permutation of [n]."""
        pass

    def sample(self, n, seed):
        return self.draw(check_size(n), get_rng(seed))

    def draws(self, n, trials, rng, progress=False):
        """Yields trials permutations drawn from the same generator."""
        n = check_size(n)
        for _ in tqdm(range(trials), disable=not progress, desc=self.name, leave=False):
            yield self.draw(n, rng)

    def exact_table(self, n, jobs=1, comm=None):
        """Exact DistTable of the sampler at size n, None when it has no finite enumeration."""
        return None

    def describe(self):
        return {"model": self.name}


class StepLawSampler(Sampler):
    """
    Sequential sampler: i_1 = 1 and every later initial rank is drawn from the
    step law with a single uniform, then the ranks are decoded.
    """

    name = "step-law"

    def __init__(self, law):
        self.law = law

    def draw_ranks(self, n, rng):
        uniforms = rng.random(n - 1)
        ranks = [1]
        composition = ROOT
        for j in range(2, n + 1):
            i = self.law.draw(j, composition, uniforms[j - 2])
            ranks.append(i)
            if self.law.needs_state:
                composition = composition.follower_for_rank(i)
        return ranks

    def draw(self, n, rng):
        return from_initial_ranks(InitialRanks(self.draw_ranks(n, rng)))

    def draw_ranks_batch(self, n, trials, rng):
        """
        Initial ranks of trials draws, an array of shape (trials, n).

        The draws that share a composition at position j share one exact rank
        law, so each position costs one searchsorted per distinct composition.
        """
        uniforms = rng.random((trials, n - 1))
        ranks = np.ones((trials, n), dtype=np.int64)
        states = np.zeros(trials, dtype=np.int64)
        compositions = [ROOT]
        for j in range(2, n + 1):
            followers = {}
            next_states = np.zeros_like(states)
            for s in np.unique(states):
                rows = np.flatnonzero(states == s)
                law = self.law.rank_law(j, compositions[s])
                slots = np.array(sorted(law))
                cumulative = np.cumsum([float(law[i]) for i in slots])
                picks = np.searchsorted(cumulative, uniforms[rows, j - 2] * cumulative[-1], side="right")
                chosen = slots[np.minimum(picks, len(slots) - 1)]
                ranks[rows, j - 1] = chosen
                if self.law.needs_state:
                    for i in np.unique(chosen):
                        follower = compositions[s].follower_for_rank(int(i))
                        next_states[rows[chosen == i]] = followers.setdefault(follower, len(followers))
            if self.law.needs_state:
                compositions, states = list(followers), next_states
        return ranks

    def draws(self, n, trials, rng, progress=False):
        n = check_size(n)
        if n > BATCH_MAX_N:
            yield from super().draws(n, trials, rng, progress)
            return
        for row in tqdm(self.draw_ranks_batch(n, trials, rng), disable=not progress, desc=self.name, leave=False):
            yield from_initial_ranks(InitialRanks(row.tolist()))

    def exact_table(self, n, jobs=1, comm=None):
        return pushforward_table(n, self.law, jobs, comm)

    def describe(self):
        return {"model": self.name, **self.law.describe()}


def check_size(n):
    if int(n) != n or n < 1:
        raise ArgumentError(f"n={n} must be a positive integer.")
    return int(n)
