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
Ranking of real sequences with repeated values

Only running extremes may be repeated: a repeated running maximum is placed
above the earlier copies (the earlier one is lower), a repeated running minimum
below them (the later one is lower). An initial constant run has no running
extreme to compare with, so each of its entries receives an explicit tiebreak.
"""

from bisect import bisect_left, bisect_right, insort

from .permutation import InitialRanks
from ..errors import ArgumentError, InvalidSequenceError

LOW, HIGH = "low", "high"


def constant_prefix_length(xs):
    m = 1
    while m < len(xs) and xs[m] == xs[0]:
        m += 1
    return m


def rank_order(xs, prefix_tiebreak=()):
    """
    Initial ranks of the order induced on the positions of xs.

    Parameters
    ----------
    xs : sequence of float
        The values to be ranked. Comparisons are exact, no tolerance is used.
    prefix_tiebreak : sequence of {'low', 'high'}
        Tiebreaks for positions 2, ..., m of an initial constant run of length
        m. 'low' makes the entry a lower record (rank 1), 'high' an upper one
        (rank j). Extra entries are ignored.

    Returns
    -------
    InitialRanks
    """
    xs = list(xs)
    if len(xs) == 0:
        raise ArgumentError("Cannot rank an empty sequence.")
    m = constant_prefix_length(xs)
    tiebreak = list(prefix_tiebreak)
    if len(tiebreak) < m - 1:
        raise ArgumentError(f"A constant prefix of length {m} needs {m - 1} tiebreaks, "
                            f"{len(tiebreak)} were given.")
    ranks = [1]
    for j in range(2, m + 1):
        choice = tiebreak[j - 2]
        if choice == LOW:
            ranks.append(1)
        elif choice == HIGH:
            ranks.append(j)
        else:
            raise ArgumentError(f"Tiebreak '{choice}' not recognized, use '{LOW}' or '{HIGH}'.")
    seen = sorted(xs[:m])
    for j in range(m + 1, len(xs) + 1):
        x = xs[j - 1]
        below = bisect_left(seen, x)
        equal = bisect_right(seen, x) - below
        if equal == 0:
            ranks.append(below + 1)
        elif x == seen[-1]:
            ranks.append(j)
        elif x == seen[0]:
            ranks.append(1)
        else:
            raise InvalidSequenceError(f"Value {x} at position {j} repeats a value that is neither "
                                       f"the running maximum nor the running minimum.")
        insort(seen, x)
    return InitialRanks(ranks)
