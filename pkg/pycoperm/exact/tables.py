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
Exact distribution tables

DistTable maps permutations of [n] to exact probabilities. WTable keeps, for
every (n, l, u), the probability weight of one permutation with l lower and u
upper proper records together with the total mass of those permutations.
"""

import csv
import io
import json
from collections import defaultdict
from fractions import Fraction

from .laws import general_closed_form
from .params import TwoParam
from .poset import centered_compositions, d_count
from .stirling import record_stirling
from ..errors import ValidationError, ArgumentError
from ..records import Permutation, extract_records, restrict
from ..utils import format_rational, parse_rational, rising


class DistTable:

    def __init__(self, n, probabilities):
        self.n = n
        self.probabilities = {p: Fraction(q) for p, q in probabilities.items() if q != 0}
        for p in self.probabilities:
            if p.n != n:
                raise ValidationError(f"Permutation {p} does not belong to S_{n}.")

    def __getitem__(self, p):
        return self.probabilities.get(p, Fraction(0))

    def __len__(self):
        return len(self.probabilities)

    def __eq__(self, other):
        return isinstance(other, DistTable) and self.n == other.n and self.probabilities == other.probabilities

    def items(self):
        """Entries sorted by permutation word."""
        return sorted(self.probabilities.items(), key=lambda item: item[0].values)

    def total(self):
        return sum(self.probabilities.values(), Fraction(0))

    def is_normalized(self):
        return self.total() == 1

    def marginal(self, statistic):
        """Pushforward of the table by a function of the permutation."""
        result = defaultdict(Fraction)
        for p, q in self.probabilities.items():
            result[statistic(p)] += q
        return dict(result)

    def restrict(self, m):
        """Law of the first m entries ranked, i.e. the table pushed by restrict(., m)."""
        if not 1 <= m <= self.n:
            raise ArgumentError(f"Cannot restrict a table of S_{self.n} to S_{m}.")
        return DistTable(m, self.marginal(lambda p: restrict(p, m)))

    def fibers(self, statistic):
        """Groups the support (and the zero-probability permutations) by a statistic."""
        groups = defaultdict(list)
        for p in Permutation.all(self.n):
            groups[statistic(p)].append(p)
        return groups

    def to_dict(self):
        return {"n": self.n,
                "entries": [{"perm": str(p), "p": format_rational(q)} for p, q in self.items()]}

    def to_json(self):
        return json.dumps(self.to_dict())

    def to_csv(self):
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["perm", "p"])
        for p, q in self.items():
            writer.writerow([str(p), format_rational(q)])
        return out.getvalue()

    @classmethod
    def from_dict(cls, data):
        return cls(data["n"], {Permutation.parse(e["perm"]): parse_rational(e["p"]) for e in data["entries"]})

    def __repr__(self):
        return f"DistTable(n={self.n}, support={len(self)})"


class WTable:
    """
    weight[(n, l, u)]: probability of any single permutation of [n] with l
    lower and u upper proper records (class average for laws that are not
    functions of (l, u)); mass[(n, l, u)]: total probability of those
    permutations.
    """

    def __init__(self, n_max, weight, mass):
        self.n_max = n_max
        self.weight = dict(weight)
        self.mass = dict(mass)

    def __getitem__(self, key):
        return self.weight.get(key, Fraction(0))

    def keys(self):
        return sorted(self.weight)

    def to_dict(self):
        return {"n_max": self.n_max,
                "entries": [{"n": n, "l": l, "u": u,
                             "weight": format_rational(self.weight[(n, l, u)]),
                             "mass": format_rational(self.mass[(n, l, u)])} for n, l, u in self.keys()]}

    def to_json(self):
        return json.dumps(self.to_dict())

    def to_csv(self):
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["n", "l", "u", "weight", "mass"])
        for n, l, u in self.keys():
            writer.writerow([n, l, u, format_rational(self.weight[(n, l, u)]),
                             format_rational(self.mass[(n, l, u)])])
        return out.getvalue()


def two_param_weight(n, l, u, params):
    return params.theta ** l * params.zeta ** u / rising(params.theta + params.zeta, n - 1)


def w_table(params, n_max):
    """
    WTable of a two-param or general law up to n_max.

    For two-param laws the weight is theta^l zeta^u / (theta + zeta)_{n-1}. For
    general laws the masses are summed over the centered compositions with
    the given counts and the weight is the class average.
    """
    weight, mass = {}, {}
    for n in range(1, n_max + 1):
        if isinstance(params, TwoParam):
            for l in range(n):
                for u in range(n - l):
                    count = record_stirling(n, l, u)
                    if count:
                        weight[(n, l, u)] = two_param_weight(n, l, u, params)
                        mass[(n, l, u)] = count * weight[(n, l, u)]
        else:
            masses = defaultdict(Fraction)
            for composition in centered_compositions(n):
                key = (n, composition.lower_count, composition.upper_count)
                masses[key] += d_count(composition) * general_closed_form(composition, params)
            for key, value in masses.items():
                mass[key] = value
                weight[key] = value / record_stirling(*key)
    return WTable(n_max, weight, mass)


def w_table_from_tables(tables):
    """WTable computed from exact DistTables, one per size."""
    weight, mass = {}, {}
    for table in tables:
        counts = table.marginal(lambda p: (extract_records(p).lower_count, extract_records(p).upper_count))
        for (l, u), value in counts.items():
            mass[(table.n, l, u)] = value
            weight[(table.n, l, u)] = value / record_stirling(table.n, l, u)
    return WTable(max(t.n for t in tables), weight, mass)


def dual_defects(w, field="weight"):
    """
    Keys (n, l, u) where w_n(l, u) = w_{n+1}(l+1, u) + w_{n+1}(l, u+1) + (n-1) w_{n+1}(l, u)
    fails, for n < n_max.
    """
    values = getattr(w, field)

    def get(key):
        return values.get(key, Fraction(0))

    defects = []
    if get((1, 0, 0)) != 1:
        defects.append((1, 0, 0))
    for (n, l, u) in sorted(values):
        if n >= w.n_max:
            continue
        rhs = get((n + 1, l + 1, u)) + get((n + 1, l, u + 1)) + (n - 1) * get((n + 1, l, u))
        if get((n, l, u)) != rhs:
            defects.append((n, l, u))
    return defects


def check_dual(w, field="weight"):
    """True iff the dual recursion holds exactly with w_1(0, 0) = 1."""
    return len(dual_defects(w, field)) == 0
