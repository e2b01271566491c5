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
Bijections and projections, checked on all of S_n: the commutative diagram of
restrict with the classical projections, the fiber structure of
fold_records, the profile and composition round trips, the ordered blocks and
the initial ranks encoding.
"""

from collections import Counter, defaultdict
from math import comb, factorial

from .suite import Suite
from ..symmetries import check_inverse_records
from ...exact import centered_compositions
from ...records import Permutation, to_initial_ranks, from_initial_ranks, restrict, inverse, complement, \
    extract_records, profile_composition, ordered_blocks, classical_project, hat_bijection, fold_records, \
    ONE_ROW_DELETE, CYCLE_DELETE, FORWARD, INVERSE

DIAGRAM_MAX_N = 6
BLOCKS_MAX_N = 7
INVERSE_MAX_N = 7


def diagram_defects(n):
    """Permutations of S_n where one of the two squares of the diagram does not commute."""
    defects = []
    for p in Permutation.all(n):
        top = inverse(restrict(p, n - 1))
        if top != classical_project(inverse(p), ONE_ROW_DELETE) or \
                hat_bijection(top) != classical_project(hat_bijection(inverse(p)), CYCLE_DELETE):
            defects.append(p)
    return defects


def fold_fibers(n):
    """{image: Counter of the lower counts of its preimages}"""
    fibers = defaultdict(Counter)
    for p in Permutation.all(n):
        fibers[fold_records(p)][extract_records(p).lower_count] += 1
    return fibers


def fold_defects(n):
    """Images whose fiber is not 2^r preimages, C(r, l) of them with l lower records, r = l' + 1."""
    defects = []
    total = 0
    for image, split in fold_fibers(n).items():
        r = extract_records(image).lower_count + 1
        total += sum(split.values())
        if sum(split.values()) != 2 ** r or any(split.get(l, 0) != comb(r, l) for l in range(r + 1)):
            defects.append(image)
    return defects, total


class DiagramSuite(Suite):

    name = "diagram"
    default_max_n = 8

    def checks(self, report):
        bad = [n for n in self.sizes(2, DIAGRAM_MAX_N) if diagram_defects(n)]
        report.check("restrict commutes with one-row-delete and cycle-delete through inverse and hat",
                     not bad, f"n in {bad}" if bad else None)
        bad = []
        for n in self.sizes(2):
            defects, total = fold_defects(n)
            if defects or total != factorial(n):
                bad.append(n)
        report.check("fold_records fibers have 2^r members split as C(r, l)", not bad,
                     f"n in {bad}" if bad else None)
        report.add("fold_images", {n: len(fold_fibers(n)) for n in self.sizes(2, DIAGRAM_MAX_N)})

        bad_ranks, bad_records, bad_hat, bad_restrict, bad_swap = set(), set(), set(), set(), set()
        for n in self.sizes():
            for p in Permutation.all(n):
                if from_initial_ranks(to_initial_ranks(p)) != p:
                    bad_ranks.add(n)
                profile = extract_records(p)
                if profile.composition().degree != n or \
                        not profile_composition(profile.composition()).same_values(profile):
                    bad_records.add(n)
                if hat_bijection(hat_bijection(p, INVERSE), FORWARD) != p:
                    bad_hat.add(n)
                swapped = extract_records(complement(p))
                if (swapped.lower_count, swapped.upper_count) != (profile.upper_count, profile.lower_count):
                    bad_swap.add(n)
                if n <= DIAGRAM_MAX_N and any(restrict(restrict(p, m2), m) != restrict(p, m)
                                              for m2 in range(1, n + 1) for m in range(1, m2 + 1)):
                    bad_restrict.add(n)
        report.check("initial ranks round trip", not bad_ranks, f"n in {sorted(bad_ranks)}" if bad_ranks else None)
        report.check("profile and composition round trip on every permutation", not bad_records,
                     f"n in {sorted(bad_records)}" if bad_records else None)
        report.check("hat forward after inverse is the identity", not bad_hat,
                     f"n in {sorted(bad_hat)}" if bad_hat else None)
        report.check("complement swaps (l, u)", not bad_swap, f"n in {sorted(bad_swap)}" if bad_swap else None)
        report.check("restrict(restrict(p, m'), m) = restrict(p, m)", not bad_restrict,
                     f"n in {sorted(bad_restrict)}" if bad_restrict else None)

        bad = [n for n in self.sizes()
               if any(profile_composition(profile_composition(c)) != c for c in centered_compositions(n))]
        report.check("composition to profile to composition on every centered composition", not bad,
                     f"n in {bad}" if bad else None)

        bad = set()
        for n in self.sizes(high=BLOCKS_MAX_N):
            for p in Permutation.all(n):
                blocks, profile = ordered_blocks(p), extract_records(p)
                times = {k: profile.time(k) for k in range(-profile.lower_count, profile.upper_count + 1)}
                if blocks.sizes() != list(profile.composition().parts) or blocks.minima() != times:
                    bad.add(n)
        report.check("ordered block sizes are the composition parts and minima the record times", not bad,
                     f"n in {sorted(bad)}" if bad else None)

        for n in self.sizes(high=INVERSE_MAX_N):
            _, inverse_report = check_inverse_records(n)
            report.extend(inverse_report, f"inverse[{n}]")
