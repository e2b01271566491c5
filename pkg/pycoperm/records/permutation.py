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
Permutations in one-row notation and their initial ranks encoding
"""

import itertools
from bisect import bisect_right, insort

from ..errors import InvalidEncodingError, ArgumentError
from ..utils import parse_int_list


class Permutation:
    """
    A permutation of [n] in one-row notation (pi_1, ..., pi_n).

    Instances are immutable and hashable, so they can be used as keys of the
    exact distribution tables.
    """

    __slots__ = ("_values",)

    def __init__(self, values):
        values = tuple(int(v) for v in values)
        if len(values) == 0:
            raise InvalidEncodingError("A permutation must have at least one entry.")
        if sorted(values) != list(range(1, len(values) + 1)):
            raise InvalidEncodingError(f"'{','.join(map(str, values))}' is not a permutation "
                                       f"of {{1, ..., {len(values)}}}.")
        self._values = values

    @classmethod
    def parse(cls, text):
        """Builds a permutation from its word syntax, e.g. '3,2,7,6,1,4,8,5'."""
        return cls(parse_int_list(text, "permutation"))

    @classmethod
    def identity(cls, n):
        return cls(range(1, n + 1))

    @classmethod
    def all(cls, n):
        """Yields every permutation of [n] in lexicographic order."""
        for values in itertools.permutations(range(1, n + 1)):
            yield cls(values)

    @property
    def values(self):
        return self._values

    @property
    def n(self):
        return len(self._values)

    def __len__(self):
        return len(self._values)

    def __iter__(self):
        return iter(self._values)

    def __getitem__(self, item):
        return self._values[item]

    def __eq__(self, other):
        return isinstance(other, Permutation) and self._values == other._values

    def __lt__(self, other):
        return (len(self), self._values) < (len(other), other._values)

    def __hash__(self):
        return hash(self._values)

    def __str__(self):
        return ",".join(str(v) for v in self._values)

    def __repr__(self):
        return f"Permutation({str(self)})"

    def to_initial_ranks(self):
        return to_initial_ranks(self)

    def restrict(self, m):
        return restrict(self, m)


class InitialRanks:
    """
    The initial ranks (i_1, ..., i_n) of a permutation, with 1 <= i_j <= j.

    i_j counts the entries among the first j ones that are less than or equal
    to the j-th entry, so i_j = 1 marks a lower record and i_j = j an upper one.
    """

    __slots__ = ("_ranks",)

    def __init__(self, ranks):
        ranks = tuple(int(i) for i in ranks)
        if len(ranks) == 0:
            raise InvalidEncodingError("Initial ranks must have at least one entry.")
        for j, i in enumerate(ranks, start=1):
            if not 1 <= i <= j:
                raise InvalidEncodingError(f"Initial rank i_{j}={i} is out of the range [1, {j}].")
        self._ranks = ranks

    @classmethod
    def parse(cls, text):
        return cls(parse_int_list(text, "initial ranks"))

    @property
    def ranks(self):
        return self._ranks

    @property
    def n(self):
        return len(self._ranks)

    def __len__(self):
        return len(self._ranks)

    def __iter__(self):
        return iter(self._ranks)

    def __getitem__(self, item):
        return self._ranks[item]

    def __eq__(self, other):
        return isinstance(other, InitialRanks) and self._ranks == other._ranks

    def __hash__(self):
        return hash(self._ranks)

    def __str__(self):
        return ",".join(str(i) for i in self._ranks)

    def __repr__(self):
        return f"InitialRanks({str(self)})"

    def to_permutation(self):
        return from_initial_ranks(self)


def to_initial_ranks(p):
    """Encodes a permutation by its initial ranks."""
    prefix = []
    ranks = []
    for v in p:
        ranks.append(bisect_right(prefix, v) + 1)
        insort(prefix, v)
    return InitialRanks(ranks)


def from_initial_ranks(r):
    """
    Decodes initial ranks by insertion: position j is inserted in the relative
    order of the previous positions with i_j - 1 of them below it.
    """
    if not isinstance(r, InitialRanks):
        r = InitialRanks(r)
    order = []
    for position, i in enumerate(r):
        order.insert(i - 1, position)
    values = [0] * len(order)
    for value, position in enumerate(order, start=1):
        values[position] = value
    return Permutation(values)


def restrict(p, m):
    """Ranks the first m entries of p (the projection from S_n to S_m)."""
    if not 1 <= m <= p.n:
        raise ArgumentError(f"Cannot restrict a permutation of size {p.n} to size {m}.")
    if m == p.n:
        return p
    return from_initial_ranks(to_initial_ranks(p).ranks[:m])


def complement(p):
    """Reverses the order of values, v -> n+1-v, which swaps lower and upper records."""
    n = p.n
    return Permutation(n + 1 - v for v in p)


def reverse_word(p):
    return Permutation(reversed(p.values))


def inverse(p):
    values = [0] * p.n
    for position, v in enumerate(p, start=1):
        values[v - 1] = position
    return Permutation(values)
