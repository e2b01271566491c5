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
Classical projections and bijections on permutations
"""

from .permutation import Permutation, to_initial_ranks, from_initial_ranks
from ..errors import ArgumentError

ONE_ROW_DELETE, CYCLE_DELETE = "one-row-delete", "cycle-delete"
FORWARD, INVERSE = "forward", "inverse"


def classical_project(p, mode):
    """
    Projects S_n onto S_{n-1} by deleting n, either from the word
    (one-row-delete) or from its cycle (cycle-delete).
    """
    n = p.n
    if n == 1:
        raise ArgumentError("Classical projections need n >= 2.")
    if mode == ONE_ROW_DELETE:
        return Permutation(v for v in p if v != n)
    if mode == CYCLE_DELETE:
        mapping = list(p.values)
        successor = mapping[n - 1]
        if successor != n:
            predecessor = mapping.index(n)
            mapping[predecessor] = successor
        return Permutation(mapping[:n - 1])
    raise ArgumentError(f"Projection mode '{mode}' not recognized.")


def cycles(p):
    """Cycles of p as a mapping, each one starting at its minimum, by increasing minima."""
    remaining = set(p.values)
    result = []
    for start in sorted(remaining):
        if start not in remaining:
            continue
        cycle = [start]
        remaining.discard(start)
        x = p[start - 1]
        while x != start:
            cycle.append(x)
            remaining.discard(x)
            x = p[x - 1]
        result.append(tuple(cycle))
    return result


def _hat(p):
    mapping = [0] * p.n
    segment = []

    def close(seg):
        for a, b in zip(seg, seg[1:] + seg[:1]):
            mapping[a - 1] = b

    low = p[0]
    for v in p:
        if v < low:
            close(segment)
            segment = []
            low = v
        segment.append(v)
    close(segment)
    return Permutation(mapping)


def _hat_inverse(p):
    word = []
    for cycle in sorted(cycles(p), key=lambda c: -c[0]):
        word.extend(cycle)
    return Permutation(word)


def hat_bijection(p, direction=FORWARD):
    """
    Reads the word of p, split before each proper lower record, as a cycle
    decomposition (forward), or writes the cycles of p starting at their
    minima by decreasing minima (inverse).
    """
    if direction == FORWARD:
        return _hat(p)
    if direction == INVERSE:
        return _hat_inverse(p)
    raise ArgumentError(f"Direction '{direction}' not recognized.")


def fold_records(p):
    """
    Maps p in S_n to S_{n-1} sending every proper record of p to a lower record.

    The image has initial ranks i'_{j-1} = i_j when i_j < j and 1 otherwise, so
    l + u of p equals the number of lower records of the image plus one.
    """
    if p.n == 1:
        raise ArgumentError("fold_records needs n >= 2.")
    ranks = to_initial_ranks(p).ranks
    return from_initial_ranks([i if i < j else 1 for j, i in enumerate(ranks, start=1) if j >= 2])
