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
Uniform permutation with a prescribed record profile

The first entry is the center r_0. Every later entry is a uniform draw v from
the values not emitted yet: when v falls below the current minimum the next
lower record value is emitted instead, when it falls above the current maximum
the next upper record value, and otherwise v itself. The drawn value is not
consumed when a record value replaces it, so the pool is always the set of
values not emitted yet and the output has exactly the prescribed profile.
"""

from fractions import Fraction

from .rng import get_rng
from .sampler import Sampler
from ..errors import ValidationError
from ..exact.poset import d_count
from ..exact.tables import DistTable
from ..records import Permutation, RecordProfile, CenteredComposition, extract_records


def _as_profile(profile):
    if isinstance(profile, CenteredComposition):
        return profile.profile()
    if isinstance(profile, RecordProfile):
        return profile
    raise ValidationError(f"'{profile}' is neither a record profile nor a centered composition.")


def draw_conditioned(profile, rng):
    profile = _as_profile(profile)
    n = profile.n
    lower = [profile.value(-k) for k in range(1, profile.lower_count + 1)]
    upper = [profile.value(k) for k in range(1, profile.upper_count + 1)]
    center = profile.center
    pool = [v for v in range(1, n + 1) if v != center]
    word = [center]
    low = high = center
    nl = nu = 0
    for w in rng.random(n - 1):
        v = pool[int(w * len(pool))]
        if v < low:
            v = low = lower[nl]
            nl += 1
        elif v > high:
            v = high = upper[nu]
            nu += 1
        pool.remove(v)
        word.append(v)
    return Permutation(word)


def sample_conditioned(profile, seed):
    return draw_conditioned(profile, get_rng(seed))


class ConditionedSampler(Sampler):

    name = "conditioned"

    def __init__(self, profile):
        self.profile = _as_profile(profile)
        self.composition = self.profile.composition()

    def draw(self, n, rng):
        if n != self.profile.n:
            raise ValidationError(f"The record profile {self.profile} has size {self.profile.n}, not {n}.")
        return draw_conditioned(self.profile, rng)

    def exact_table(self, n, jobs=1, comm=None):
        """Uniform law on the class, listed by a filtered scan of S_n."""
        size = d_count(self.composition)
        members = [p for p in Permutation.all(n) if extract_records(p).same_values(self.profile)]
        if len(members) != size:
            raise ValidationError(f"Class size {len(members)} differs from d_count {size}.")
        return DistTable(n, {p: Fraction(1, size) for p in members})

    def describe(self):
        return {"model": self.name, "profile": str(self.profile)}
