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
Record Stirling identities: recursion, enumeration and the closed form
agree, the table is symmetric, its marginals are the signless Stirling
numbers and its generating function is the rising factorial.
"""

from .suite import Suite
from ...exact import TwoParam, record_stirling_table, record_stirling_enumerated, record_stirling_identity, \
    signless_stirling, lower_marginal, check_generating_function

GENERATING_PARAMS = (TwoParam(1, 1), TwoParam(2, 3), TwoParam("1/2", "5/2"))


class IdentitiesSuite(Suite):

    name = "identities"
    default_max_n = 10

    def checks(self, report):
        recursion_vs_enumeration, recursion_vs_identity, asymmetric, marginal = [], [], [], []
        for n in self.sizes():
            table = record_stirling_table(n)
            if table != record_stirling_enumerated(n):
                recursion_vs_enumeration.append(n)
            if any(count != record_stirling_identity(n, l, u) for (l, u), count in table.items()):
                recursion_vs_identity.append(n)
            if any(table.get((u, l), 0) != count for (l, u), count in table.items()):
                asymmetric.append(n)
            if any(lower_marginal(n, l) != signless_stirling(n, l + 1) for l in range(n)):
                marginal.append(n)
            report.add(f"classes[{n}]", len(table))
        report.check("recursion matches the enumeration of S_n", not recursion_vs_enumeration,
                     f"n in {recursion_vs_enumeration}" if recursion_vs_enumeration else None)
        report.check("recursion matches [n-1; l+u] C(l+u, l)", not recursion_vs_identity,
                     f"n in {recursion_vs_identity}" if recursion_vs_identity else None)
        report.check("symmetric in (l, u)", not asymmetric, f"n in {asymmetric}" if asymmetric else None)
        report.check("lower marginal is [n; l+1]", not marginal, f"n in {marginal}" if marginal else None)
        for params in GENERATING_PARAMS:
            failed = [n for n in self.sizes() if not check_generating_function(n, params)]
            report.check(f"generating function at theta={params.theta}, zeta={params.zeta}", not failed,
                         f"n in {failed}" if failed else None)
