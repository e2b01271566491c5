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
Exact checks of the record indicator structure

Under P^(theta, zeta) the indicators B_j of a proper record at position j are
independent Bernoulli(eta / (eta + j - 2)), eta = theta + zeta (the Q_eta
law), and the types of the successive records are an independent
Bernoulli(theta / eta) sequence, independent of the B's. Everything is
checked on the exact pushforward table, so the checks are boolean.
"""

import itertools
from collections import defaultdict
from fractions import Fraction

from .reports import Report, IndicatorStats
from ..exact.enumeration import pushforward_table
from ..exact.laws import make_law


def indicator_law(table):
    """Exact joint law {(B, I): probability} of the record indicators and types."""
    joint = defaultdict(Fraction)
    for p, q in table.probabilities.items():
        stats = IndicatorStats.from_permutation(p)
        joint[(tuple(stats.indicators), tuple(stats.types))] += q
    return dict(joint)


def q_eta_probability(b, eta):
    """Probability of the indicator vector b = (B_2, ..., B_n) under Q_eta."""
    value = Fraction(1)
    for j, bit in enumerate(b, start=2):
        a = Fraction(eta) / (eta + j - 2)
        value *= a if bit else 1 - a
    return value


def check_indicator_structure(params, n, jobs=1, comm=None, table=None):
    """
    (i) B independent with the Q_eta marginals, (ii) types independent
    Bernoulli(theta / eta) and independent of B, (iii) given the record
    positions and l, all the allocations of the lower records equally likely.

    Returns
    -------
    (bool, Report)
    """
    table = pushforward_table(n, make_law(params), jobs, comm) if table is None else table
    eta = params.theta + params.zeta
    p = params.theta / eta
    joint = indicator_law(table)
    marginal_b = defaultdict(Fraction)
    for (b, _), q in joint.items():
        marginal_b[b] += q
    report = Report("indicator-structure", params, n)
    report.add("eta", eta)
    report.add("p", p)
    report.add("record_probabilities", [Fraction(eta) / (eta + j - 2) for j in range(2, n + 1)])

    bits = list(itertools.product((0, 1), repeat=n - 1))
    bad_b = [b for b in bits if marginal_b.get(b, 0) != q_eta_probability(b, eta)]
    bad_i = []
    for b in bits:
        for types in itertools.product((0, 1), repeat=sum(b)):
            lower = sum(types)
            expected = q_eta_probability(b, eta) * p ** lower * (1 - p) ** (len(types) - lower)
            if joint.get((b, types), 0) != expected:
                bad_i.append((b, types))
    allocations = defaultdict(set)
    for b in bits:
        for types in itertools.product((0, 1), repeat=sum(b)):
            allocations[(b, sum(types))].add(joint.get((b, types), Fraction(0)))
    bad_alloc = [key for key, values in allocations.items() if len(values) > 1]

    ok = report.check("indicators are independent Q_eta Bernoulli variables", not bad_b,
                      f"{len(bad_b)} indicator vectors off" if bad_b else None)
    ok &= report.check("types are an independent Bernoulli(theta/eta) thinning", not bad_i,
                       f"{len(bad_i)} (indicator, type) pairs off" if bad_i else None)
    ok &= report.check("allocations of lower records are equally likely", not bad_alloc,
                       f"{len(bad_alloc)} classes not uniform" if bad_alloc else None)
    return ok, report
