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
Integer-parameter window projection

With integer theta, zeta >= 1 and d = theta + zeta - 2 prehistoric values, the
sequence X keeps the entries of a sliding window of order statistics: a new
value above the window contributes the (j + theta - 1)-th order statistic of
all the values seen so far, one below it the theta-th, and one inside it
itself. Ranking X gives a P^(theta, zeta) permutation when the input is an
exchangeable sequence of distinct values.
"""

from bisect import insort, bisect_left

from ..errors import ArgumentError


def check_window_params(theta, zeta):
    if int(theta) != theta or int(zeta) != zeta or theta < 1 or zeta < 1:
        raise ArgumentError(f"The window construction needs integer theta, zeta >= 1 "
                            f"(got theta={theta}, zeta={zeta}).")
    return int(theta), int(zeta)


def window_sequence(values, theta, zeta):
    """
    Maps d prehistoric values followed by n stream values to X_1, ..., X_n.

    Parameters
    ----------
    values : sequence
        d + n distinct comparable values, the first d = theta + zeta - 2 of
        them prehistoric.
    theta, zeta : int
    """
    theta, zeta = check_window_params(theta, zeta)
    d = theta + zeta - 2
    if len(values) <= d:
        raise ArgumentError(f"At least {d + 1} values are needed, {len(values)} were given.")
    seen = sorted(values[:d + 1])
    xs = [seen[theta - 1]]
    for j, w in enumerate(values[d + 1:], start=2):
        low, high = min(xs), max(xs)
        insort(seen, w)
        if w > high:
            xs.append(seen[j + theta - 2])
        elif w < low:
            xs.append(seen[theta - 1])
        else:
            xs.append(w)
    return xs


def window_rank(s, j, theta):
    """Initial rank i_j produced by a stream value of rank s among the d + j values seen."""
    if s <= theta:
        return 1
    if s < j + theta - 1:
        return s - theta + 1
    return j


def window_ranks(values, theta, zeta):
    """Initial ranks of the window sequence, computed from the ranks of the stream values."""
    theta, zeta = check_window_params(theta, zeta)
    d = theta + zeta - 2
    seen = sorted(values[:d])
    ranks = []
    for j, w in enumerate(values[d:], start=1):
        s = bisect_left(seen, w) + 1
        insort(seen, w)
        ranks.append(1 if j == 1 else window_rank(s, j, theta))
    return ranks
