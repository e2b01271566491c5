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
Record Stirling numbers

record_stirling(n, l, u) counts the permutations of [n] with l proper lower and
u proper upper records. Adding the n+1-th entry either creates a lower record,
an upper record, or falls in one of the n-1 inner positions, hence

    S(n+1, l, u) = S(n, l-1, u) + S(n, l, u-1) + (n-1) S(n, l, u),

with S(1, 0, 0) = 1. Summing over u gives the signless Stirling numbers of the
first kind, and S(n, l, u) = [n-1; l+u] C(l+u, l).
"""

import itertools
from collections import Counter, defaultdict
from functools import lru_cache
from math import comb

from ..errors import ArgumentError, ResourceError
from ..utils import rising, parse_rational

EXTENSION_COUNT_CAP = 60


@lru_cache(maxsize=None)
def record_stirling(n, l, u):
    """Number of permutations of [n] with l proper lower and u proper upper records."""
    if n < 1:
        raise ArgumentError(f"n={n} must be positive.")
    if l < 0 or u < 0 or l + u > n - 1:
        return 0
    if n == 1:
        return 1
    return record_stirling(n - 1, l - 1, u) + record_stirling(n - 1, l, u - 1) + \
        (n - 2) * record_stirling(n - 1, l, u)


@lru_cache(maxsize=None)
def signless_stirling(n, k):
    """Signless Stirling numbers of the first kind [n; k]."""
    if n == 0 and k == 0:
        return 1
    if n <= 0 or k <= 0 or k > n:
        return 0
    return signless_stirling(n - 1, k - 1) + (n - 1) * signless_stirling(n - 1, k)


def record_stirling_identity(n, l, u):
    """[n-1; l+u] C(l+u, l)"""
    if l < 0 or u < 0:
        return 0
    return signless_stirling(n - 1, l + u) * comb(l + u, l)


def record_stirling_table(n):
    """{(l, u): count} for the nonzero counts of size n."""
    return {(l, u): record_stirling(n, l, u)
            for l in range(n) for u in range(n - l) if record_stirling(n, l, u)}


def record_stirling_enumerated(n):
    """Counts (l, u) over all the permutations of [n] by a direct left to right scan."""
    counts = Counter()
    for word in itertools.permutations(range(1, n + 1)):
        low = high = word[0]
        l = u = 0
        for v in word:
            if v < low:
                low = v
                l += 1
            elif v > high:
                high = v
                u += 1
        counts[(l, u)] += 1
    return dict(counts)


def lower_marginal(n, l):
    """Sum over u of record_stirling(n, l, u), equal to [n; l+1]."""
    return sum(record_stirling(n, l, u) for u in range(n))


def check_generating_function(n, params):
    """
    Checks that sum_{l,u} S(n, l, u) theta^l zeta^u equals (theta + zeta)_{n-1}
    exactly.
    """
    theta, zeta = params.theta, params.zeta
    lhs = sum((count * theta ** l * zeta ** u for (l, u), count in record_stirling_table(n).items()),
              parse_rational(0))
    return lhs == rising(theta + zeta, n - 1)


def extension_count(n, l, u, n2, l2, u2):
    """
    Number of permutations of [n2] with record counts (l2, u2) whose restriction
    to the first n entries has record counts (l, u).

    Each extending position j contributes a lower record, an upper record, or
    one of j-2 inner ranks, independently of the prefix.
    """
    if n < 1 or n > n2:
        raise ArgumentError(f"extension_count needs 1 <= n <= n2 (got n={n}, n2={n2}).")
    if n2 > EXTENSION_COUNT_CAP:
        raise ResourceError(f"n2={n2} exceeds the extension count cap {EXTENSION_COUNT_CAP}.")
    ways = {(l, u): record_stirling(n, l, u)}
    for j in range(n + 1, n2 + 1):
        following = defaultdict(int)
        for (a, b), count in ways.items():
            if count == 0:
                continue
            following[(a + 1, b)] += count
            following[(a, b + 1)] += count
            following[(a, b)] += (j - 2) * count
        ways = following
    return ways.get((l2, u2), 0)
