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
Composition poset and boundary quantities: class sizes, extension counts and
Martin ratios against brute force, the follower relation, the number of
centered compositions and the record count extensions.
"""

from collections import Counter, defaultdict
from fractions import Fraction

from .suite import Suite
from ...errors import OrderError
from ...exact import TwoParam, centered_compositions, composition_count, composition_count_formula, \
    followers, d_count, d_ext, martin_ratio, class_sizes, class_size_bruteforce, extension_profiles, \
    extension_count, w_table, check_dual
from ...records import Permutation, CenteredComposition, extract_records, restrict

SPOT_COMPOSITION = "3,1,^1,3,2"
SPOT_SIZE = 3024
SPOT_FOLLOWERS = ("1,3,1,^1,3,2", "4,1,^1,3,2", "3,2,^1,3,2", "3,1,^1,4,2", "3,1,^1,3,3", "3,1,^1,3,2,1")
EXTENSION_MAX_SMALL = 5
MARTIN_MAX_M = 9
COUNT_RANGE = range(2, 15)
RECORD_EXTENSION_MAX_N2 = 7


def representatives(n):
    """One permutation of S_n for every centered composition of n."""
    found = {}
    for p in Permutation.all(n):
        found.setdefault(extract_records(p).composition(), p)
    return found


def follows(small, big):
    try:
        d_ext(small, big)
    except OrderError:
        return False
    return True


def record_extension_counts(n2):
    """{(n, l, u, l2, u2): count} over S_n2 by restriction."""
    counts = Counter()
    for p in Permutation.all(n2):
        big = extract_records(p)
        for n in range(1, n2 + 1):
            small = extract_records(restrict(p, n))
            counts[(n, small.lower_count, small.upper_count, big.lower_count, big.upper_count)] += 1
    return counts


class BoundarySuite(Suite):

    name = "boundary"
    default_max_n = 8

    def checks(self, report):
        bad = []
        for n in self.sizes():
            sizes = class_sizes(n)
            if len(sizes) != composition_count(n) or any(d_count(c) != size for c, size in sizes.items()):
                bad.append(n)
        report.check("d_count equals the class sizes of S_n", not bad, f"n in {bad}" if bad else None)

        spot = CenteredComposition.parse(SPOT_COMPOSITION)
        brute = class_size_bruteforce(spot)
        report.add("spot_d_count", d_count(spot))
        report.add("spot_bruteforce", brute)
        report.check(f"d_count({SPOT_COMPOSITION}) = {SPOT_SIZE} by brute force",
                     d_count(spot) == brute == SPOT_SIZE)
        report.check(f"followers of {SPOT_COMPOSITION}",
                     followers(spot) == [CenteredComposition.parse(text) for text in SPOT_FOLLOWERS])

        bad = []
        for m in self.sizes(2):
            recursion = defaultdict(int)
            for small in centered_compositions(m - 1):
                for big in followers(small):
                    recursion[big] += d_count(small) * d_ext(small, big)
            if any(recursion[big] != d_count(big) for big in centered_compositions(m)):
                bad.append(m)
        report.check("d_count is the sum over predecessors of d_count times d_ext", not bad,
                     f"m in {bad}" if bad else None)

        pairs = mismatches = 0
        for n in self.sizes(high=EXTENSION_MAX_SMALL):
            for small, p in representatives(n).items():
                for m in self.sizes(n):
                    counts = extension_profiles(p, m)
                    for big in centered_compositions(m):
                        if follows(small, big):
                            pairs += 1
                            mismatches += d_ext(small, big) != counts.get(big, 0)
                        elif big in counts:
                            mismatches += 1
        report.add("d_ext_pairs", pairs)
        report.check("d_ext equals the brute force coherent extension counts", mismatches == 0,
                     f"{mismatches} pairs" if mismatches else None)

        pairs = mismatches = 0
        for n in range(1, EXTENSION_MAX_SMALL + 1):
            for small in centered_compositions(n):
                for m in range(n, MARTIN_MAX_M + 1):
                    for big in centered_compositions(m):
                        if follows(small, big):
                            pairs += 1
                            mismatches += martin_ratio(small, big) != Fraction(d_ext(small, big), d_count(big))
        report.add("martin_pairs", pairs)
        report.check("martin_ratio closed form equals d_ext / d_count", mismatches == 0,
                     f"{mismatches} pairs" if mismatches else None)

        bad = [n for n in COUNT_RANGE if composition_count(n) != composition_count_formula(n)]
        report.add("composition_counts", {n: composition_count(n) for n in COUNT_RANGE})
        report.check("2^(n-3) (n+2) centered compositions", not bad, f"n in {bad}" if bad else None)

        n2 = min(self.max_n, RECORD_EXTENSION_MAX_N2)
        brute = record_extension_counts(n2)
        bad = [key for key in ((n, l, u, l2, u2) for n in range(1, n2 + 1) for l in range(n) for u in range(n - l)
                               for l2 in range(n2) for u2 in range(n2 - l2))
               if extension_count(key[0], key[1], key[2], n2, key[3], key[4]) != brute.get(key, 0)]
        report.check(f"extension_count matches the restrictions of S_{n2}", not bad,
                     f"{len(bad)} keys" if bad else None)

        bad = [f"({t},{z})" for t, z in ((1, 1), (2, 3), ("1/2", 3))
               if not check_dual(w_table(TwoParam(t, z), max(self.max_n, 9)))]
        report.check("dual recursion holds for two-param weights", not bad, ", ".join(bad) or None)
