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
Exact enumeration engine

Pushes step laws (and the integer window projection) forward to exact tables
over S_n by walking the tree of initial ranks. The tree is cut at a fixed
depth into independent chunks so that the work can be spread over workers;
chunks are merged in order, so the result does not depend on how they ran.
"""

import itertools
import math
from collections import Counter
from fractions import Fraction

from .laws import StepLaw, ROOT
from .tables import DistTable
from .window import window_ranks, check_window_params
from ..errors import ResourceError, ArgumentError
from ..parallel import map_chunks
from ..records import Permutation, from_initial_ranks, to_initial_ranks, extract_records

ENUMERATION_CAP = 10
CHUNK_DEPTH = 4


def _walk(law, n, j, ranks, probability, composition, out):
    if j > n:
        out.append((from_initial_ranks(ranks).values, probability))
        return
    for i, q in sorted(law.rank_law(j, composition).items()):
        ranks.append(i)
        _walk(law, n, j + 1, ranks, probability * q, composition.follower_for_rank(i), out)
        ranks.pop()


def _prefixes(n):
    depth = min(n, CHUNK_DEPTH)
    return [list(prefix) for prefix in itertools.product(*[range(1, j + 1) for j in range(1, depth + 1)])]


def _law_chunk(args):
    law, n, prefix = args
    probability = Fraction(1)
    composition = ROOT
    for j, i in enumerate(prefix, start=1):
        probability *= law.rank_law(j, composition).get(i, 0)
        if probability == 0:
            return []
        if j > 1:
            composition = composition.follower_for_rank(i)
    out = []
    _walk(law, n, len(prefix) + 1, list(prefix), probability, composition, out)
    return out


def _window_chunk(args):
    theta, zeta, n, first = args
    d = theta + zeta - 2
    rest = [v for v in range(1, n + d + 1) if v != first]
    counts = Counter()
    for tail in itertools.permutations(rest):
        counts[from_initial_ranks(window_ranks((first,) + tail, theta, zeta)).values] += 1
    return sorted(counts.items())


def check_cap(n, cap=ENUMERATION_CAP):
    if n < 1:
        raise ArgumentError(f"n={n} must be positive.")
    if n > cap:
        raise ResourceError(f"n={n} exceeds the enumeration cap {cap}.")


def pushforward_table(n, law, jobs=1, comm=None, cap=ENUMERATION_CAP):
    """
    Exact DistTable of the first n entries under a step law.

    Parameters
    ----------
    n : int
    law : StepLaw
    jobs : int
        Local worker processes.
    comm : mpi4py communicator, optional
        Distributes the chunks over the MPI ranks.
    """
    check_cap(n, cap)
    if not isinstance(law, StepLaw):
        raise ArgumentError(f"'{law}' is not a step law.")
    probabilities = {}
    for chunk in map_chunks(_law_chunk, [(law, n, prefix) for prefix in _prefixes(n)], jobs, comm):
        for values, q in chunk:
            p = Permutation(values)
            probabilities[p] = probabilities.get(p, 0) + q
    return DistTable(n, probabilities)


def window_pushforward_table(n, theta, zeta, jobs=1, comm=None, cap=ENUMERATION_CAP):
    """Exact law of the window projection, enumerating S_{n+d} with the uniform law."""
    theta, zeta = check_window_params(theta, zeta)
    size = n + theta + zeta - 2
    check_cap(size, cap)
    counts = Counter()
    for chunk in map_chunks(_window_chunk, [(theta, zeta, n, first) for first in range(1, size + 1)], jobs, comm):
        for values, count in chunk:
            counts[values] += count
    total = math.factorial(size)
    return DistTable(n, {Permutation(values): Fraction(count, total) for values, count in counts.items()})


def class_sizes(n):
    """{composition: number of permutations of [n] with that record profile}, by enumeration."""
    return Counter(extract_records(p).composition() for p in Permutation.all(n))


def class_size_bruteforce(composition):
    """Counts the permutations with the profile of the composition, fixing the first entry to its center."""
    values = composition.record_values()
    l = composition.lower_count
    n, center = composition.degree, values[l]
    rest = [v for v in range(1, n + 1) if v != center]
    target = tuple(values)
    count = 0
    for tail in itertools.permutations(rest):
        low = high = center
        lower, upper = [], []
        for v in tail:
            if v < low:
                low = v
                lower.append(v)
            elif v > high:
                high = v
                upper.append(v)
        if tuple(reversed(lower)) + (center,) + tuple(upper) == target and len(lower) == l:
            count += 1
    return count


def extension_profiles(p, m):
    """Counter of the compositions of all the extensions of p to size m."""
    if m < p.n:
        raise ArgumentError(f"Cannot extend a permutation of size {p.n} to size {m}.")
    check_cap(m)
    prefix = to_initial_ranks(p).ranks
    counts = Counter()
    for tail in itertools.product(*[range(1, j + 1) for j in range(p.n + 1, m + 1)]):
        counts[extract_records(from_initial_ranks(prefix + tail)).composition()] += 1
    return counts


def coherent_extensions(p, composition):
    """Extensions of p to size composition.degree whose record profile is the composition."""
    return extension_profiles(p, composition.degree)[composition]
