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

from .reports import Report
from ..errors import ArgumentError
from ..records import extract_records


def _rec(p):
    profile = extract_records(p)
    return profile.values, profile.lower_count


def _lu(p):
    profile = extract_records(p)
    return profile.lower_count, profile.upper_count


STATISTICS = {
    "rec": _rec,
    "l,u": _lu,
    "l": lambda p: extract_records(p).lower_count,
    "u": lambda p: extract_records(p).upper_count,
    "l+u": lambda p: sum(_lu(p)),
}
# Command line friendly spellings
STATISTICS["lu"] = STATISTICS["(l,u)"] = STATISTICS["l,u"]


def get_statistic(name):
    try:
        return STATISTICS[name.replace(" ", "")]
    except KeyError:
        raise ArgumentError(f"Statistic '{name}' not recognized, use rec, (l,u), l, u or l+u.")


def check_conditional_uniformity(table, stat):
    """
    Checks exactly that the table is constant on every fiber of a statistic,
    the zero-probability permutations of S_n included.

    Returns
    -------
    (bool, Report)
    """
    statistic = get_statistic(stat)
    report = Report(f"uniformity[{stat}]", n=table.n)
    nonuniform = []
    fibers = table.fibers(statistic)
    for value, members in fibers.items():
        if len({table[p] for p in members}) > 1:
            nonuniform.append(str(value))
    report.add("fibers", len(fibers))
    report.add("nonuniform_fibers", nonuniform)
    ok = report.check(f"constant on the fibers of {stat}", not nonuniform,
                      None if not nonuniform else f"{len(nonuniform)} fibers are not uniform")
    return ok, report
