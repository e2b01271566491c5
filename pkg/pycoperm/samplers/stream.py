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

"""
Coherent streams

A stream grows one coherent permutation position by position: the prefix of
size m is, at any later time, the ranking of the first m entries. Every step
updates the record counts and times in constant time. The block sizes are
kept in a mutable list that is only brought up to date when the step law
depends on them or the caller asks for the composition.
"""

from .rng import get_rng
from ..records import from_initial_ranks, InitialRanks, RecordProfile, CenteredComposition

CENTER, LOWER, UPPER = "center", "lower", "upper"


class StreamState:
    """
    Generator state, size, initial ranks so far and the running record data.

    Parameters
    ----------
    law : StepLaw
    seed : int, SeedSequence or numpy Generator
    """

    def __init__(self, law, seed):
        self.law = law
        self.rng = get_rng(seed)
        self.ranks = []
        self.times = {}
        self.lower_count = 0
        self.upper_count = 0
        self._parts = []
        self._center = 0
        self._synced = 0
        self._composition = None

    @property
    def n(self):
        return len(self.ranks)

    @property
    def composition(self):
        """CenteredComposition of the current prefix, None before the first step."""
        if not self.ranks:
            return None
        self._sync()
        if self._composition is None:
            self._composition = CenteredComposition(self._parts, self._center)
        return self._composition

    def _sync(self):
        # Replays the ranks drawn since the last call on the parts list, in place
        for j in range(self._synced + 1, self.n + 1):
            i = self.ranks[j - 1]
            if j == 1:
                self._parts, self._center = [1], 0
            elif i == 1:
                self._parts.insert(0, 1)
                self._center += 1
            elif i == j:
                self._parts.append(1)
            else:
                current = self._composition or CenteredComposition(self._parts, self._center)
                self._parts[self._center + current.slot_block(i)] += 1
            self._composition = None
        self._synced = self.n

    def profile(self):
        composition = self.composition
        if composition is None:
            return None
        return RecordProfile(composition.record_values(), composition.lower_count, self.times)

    def permutation(self):
        return from_initial_ranks(InitialRanks(self.ranks))

    def __repr__(self):
        return f"StreamState(n={self.n}, l={self.lower_count}, u={self.upper_count})"


def stream_next(state):
    """
    Extends the stream by one position.

    Returns
    -------
    (StreamState, dict)
        The same state, updated, and the change of the record profile:
        {"n", "rank", "record", "value"}, record being 'center', 'lower',
        'upper' or None and value the record value at the time it is set.
    """
    j = state.n + 1
    if j == 1:
        state.ranks.append(1)
        state.times[0] = 1
        return state, {"n": 1, "rank": 1, "record": CENTER, "value": 1}
    composition = state.composition if state.law.needs_state else None
    i = state.law.draw(j, composition, state.rng.random())
    state.ranks.append(i)
    record = value = None
    if i == 1:
        state.lower_count += 1
        state.times[-state.lower_count] = j
        record, value = LOWER, 1
    elif i == j:
        state.upper_count += 1
        state.times[state.upper_count] = j
        record, value = UPPER, j
    return state, {"n": j, "rank": i, "record": record, "value": value}


def stream(law, seed, n):
    """Runs a fresh stream for n steps and returns its state."""
    state = StreamState(law, seed)
    for _ in range(n):
        stream_next(state)
    return state
