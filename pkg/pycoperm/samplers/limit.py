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
Degenerate limits of the two-parameter family

bernoulli-pyramid(p): every position after the first is a record, a lower one
    with probability p, so P(pi) = p^l (1-p)^u.
single-record(p): the word starts (1, n) with probability p and (n, 1)
    otherwise, the other values following in uniform order.
theta-zero(zeta): first entry 1, no proper lower record.
zeta-zero(theta): first entry n, no proper upper record.
"""

from fractions import Fraction

import numpy as np

from .sampler import Sampler, StepLawSampler, check_size
from .rng import get_rng
from ..errors import ArgumentError
from ..exact.laws import PyramidLaw, SingleRecordLaw, ThetaZeroLaw, ZetaZeroLaw
from ..records import from_initial_ranks, InitialRanks
from ..utils import parse_rational, format_rational

_laws = {
    "bernoulli-pyramid": PyramidLaw,
    "single-record": SingleRecordLaw,
    "theta-zero": ThetaZeroLaw,
    "zeta-zero": ZetaZeroLaw,
}


class LimitFamily:
    """A limit family kind with its parameter (p for the first two, zeta or theta for the others)."""

    kinds = tuple(_laws)

    def __init__(self, kind, parameter):
        if kind not in _laws:
            raise ArgumentError(f"Limit family '{kind}' not recognized, use one of {', '.join(self.kinds)}.")
        self.kind = kind
        self.parameter = parse_rational(parameter, f"{kind} parameter")
        # The law constructors check the parameter range
        self._law = _laws[kind](self.parameter)

    @classmethod
    def parse(cls, text):
        """Parses 'kind:parameter', e.g. 'bernoulli-pyramid:1/2'."""
        kind, sep, parameter = str(text).partition(":")
        if sep == "":
            raise ArgumentError(f"Limit family '{text}' must be written as 'kind:parameter'.")
        return cls(kind.strip(), parameter.strip())

    def law(self):
        return self._law

    def __eq__(self, other):
        return isinstance(other, LimitFamily) and (self.kind, self.parameter) == (other.kind, other.parameter)

    def __hash__(self):
        return hash((self.kind, self.parameter))

    def __str__(self):
        return f"{self.kind}:{format_rational(self.parameter)}"


class LimitSampler(StepLawSampler):

    name = "limit"

    def __init__(self, family):
        self.family = family
        super().__init__(family.law())


class PyramidRiffleSampler(Sampler):
    """
    Bernoulli pyramid drawn as a binomial number l of lower records, placed on
    l positions of 2..n chosen uniformly, the rest being upper records.
    """

    name = "pyramid-riffle"

    def __init__(self, p):
        self.p = Fraction(p)
        if not 0 <= self.p <= 1:
            raise ArgumentError(f"Pyramid probability p={p} must be in [0, 1].")

    def draw(self, n, rng):
        l = int(rng.binomial(n - 1, float(self.p))) if n > 1 else 0
        lower = np.zeros(n + 1, dtype=bool)
        lower[rng.permutation(n - 1)[:l] + 2] = True
        ranks = [1] + [1 if lower[j] else j for j in range(2, n + 1)]
        return from_initial_ranks(InitialRanks(ranks))

    def exact_table(self, n, jobs=1, comm=None):
        return LimitSampler(LimitFamily("bernoulli-pyramid", self.p)).exact_table(n, jobs, comm)

    def describe(self):
        return {"model": self.name, "p": format_rational(self.p)}


def sample_limit(n, family, seed):
    if not isinstance(family, LimitFamily):
        family = LimitFamily.parse(family)
    return LimitSampler(family).sample(n, seed)


def sample_pyramid_riffle(n, p, seed):
    return PyramidRiffleSampler(p).draw(check_size(n), get_rng(seed))
