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
Exact symmetries

Flipping the scatter of a permutation about the diagonal (inversion) keeps the
points without south-west neighbours, so l(p) = l(p^-1) and the lower record
times of p are the lower record values of p^-1. The value complement swaps
the lower and upper records.
"""

from collections import defaultdict
from fractions import Fraction

from .reports import Report
from ..exact.enumeration import pushforward_table
from ..exact.laws import make_law
from ..exact.params import TwoParam
from ..records import Permutation, extract_records, inverse, complement


def lower_times(p):
    profile = extract_records(p)
    return sorted((profile.time(-k) for k in range(profile.lower_count + 1)), reverse=True)


def lower_values(p):
    profile = extract_records(p)
    return sorted((profile.value(-k) for k in range(profile.lower_count + 1)), reverse=True)


def check_inverse_records(n):
    """l(p) = l(p^-1) and lower times of p = lower values of p^-1 on all of S_n."""
    report = Report("inverse-records", n=n)
    bad_count = bad_sets = 0
    for p in Permutation.all(n):
        q = inverse(p)
        bad_count += extract_records(p).lower_count != extract_records(q).lower_count
        bad_sets += lower_times(p) != lower_values(q)
    report.check("l(p) = l(p^-1)", bad_count == 0, f"{bad_count} permutations" if bad_count else None)
    report.check("lower record times of p are the lower record values of p^-1", bad_sets == 0,
                 f"{bad_sets} permutations" if bad_sets else None)
    return report.passed, report


def check_ewens_symmetries(theta, n, jobs=1, comm=None):
    """
    Under P^(theta, 1): the law is invariant by inversion and the decreasing
    lower record times have the law of the decreasing lower record values.
    """
    params = TwoParam(theta, 1)
    table = pushforward_table(n, make_law(params), jobs, comm)
    report = Report("ewens-symmetries", params, n)
    report.check("P^(theta,1) is invariant by inversion",
                 all(table[inverse(p)] == q for p, q in table.probabilities.items()))
    times, values = defaultdict(Fraction), defaultdict(Fraction)
    for p, q in table.probabilities.items():
        times[tuple(lower_times(p))] += q
        values[tuple(lower_values(p))] += q
    report.check("lower record times and values have the same law", dict(times) == dict(values))
    return report.passed, report


def check_complement_swap(params, n, jobs=1, comm=None):
    """The complement of a P^(theta, zeta) permutation follows P^(zeta, theta)."""
    table = pushforward_table(n, make_law(params), jobs, comm)
    swapped = pushforward_table(n, make_law(params.swapped()), jobs, comm)
    report = Report("complement-swap", params, n)
    report.check("complement maps P^(theta,zeta) to P^(zeta,theta)",
                 all(swapped[complement(p)] == q for p, q in table.probabilities.items())
                 and len(table) == len(swapped))
    return report.passed, report
