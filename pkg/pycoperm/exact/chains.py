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
Polya-Eggenberger laws and the Markov chains of record values and positions
"""

from fractions import Fraction
from math import comb

from ..errors import ArgumentError
from ..utils import rising, parse_rational

LOWER, UPPER = "lower", "upper"


def _pair(params):
    if isinstance(params, (tuple, list)):
        return parse_rational(params[0], "theta"), parse_rational(params[1], "zeta")
    return params.theta, params.zeta


def pe_pmf(n, params, r):
    """
    Polya-Eggenberger probability of r in [n]:
    C(n-1, r-1) (theta)_{r-1} (zeta)_{n-r} / (theta + zeta)_{n-1}.

    It is the law of the first entry of a P^(theta, zeta) permutation of size n.
    """
    if not 1 <= r <= n:
        raise ArgumentError(f"r={r} is out of the range [1, {n}].")
    theta, zeta = _pair(params)
    return comb(n - 1, r - 1) * rising(theta, r - 1) * rising(zeta, n - r) / rising(theta + zeta, n - 1)


def pe_pmf_printed(n, params, r):
    """The printed display C(n-1, r-1) (theta)_{n-1} (zeta)_{r-1} / (theta + zeta)_{n-1}, not normalized."""
    if not 1 <= r <= n:
        raise ArgumentError(f"r={r} is out of the range [1, {n}].")
    theta, zeta = _pair(params)
    return Fraction(comb(n - 1, r - 1) * rising(theta, n - 1) * rising(zeta, r - 1)) / rising(theta + zeta, n - 1)


def pe_law(n, params):
    return {r: pe_pmf(n, params, r) for r in range(1, n + 1)}


def record_chain_step(r, n, params, side):
    """
    Transition of the record values chain from the record value r.

    Lower side: the values below r are ordered as a P^(theta, 1) permutation,
    so the next lower record value v has probability pe_pmf(r-1, (theta, 1), v).
    Upper side: the next upper record value is r + d with probability
    pe_pmf(n-r, (1, zeta), d). The chain is absorbed at 1 and at n.
    """
    theta, zeta = _pair(params)
    if not 1 <= r <= n:
        raise ArgumentError(f"Record value r={r} is out of the range [1, {n}].")
    if side == LOWER:
        if r == 1:
            return {1: Fraction(1)}
        return {v: pe_pmf(r - 1, (theta, 1), v) for v in range(1, r)}
    if side == UPPER:
        if r == n:
            return {n: Fraction(1)}
        return {r + d: pe_pmf(n - r, (1, zeta), d) for d in range(1, n - r + 1)}
    raise ArgumentError(f"Side '{side}' not recognized.")


def record_chain_step_printed(r, n, params, side):
    """
    Literal reading of the printed kernel: r -> r - d with pe_pmf(r, (theta, 1), d)
    on the lower side and r -> r + d with pe_pmf(n - r + 1, (zeta, 1), d) on
    the upper one. Part of its mass falls outside [1, n].
    """
    theta, zeta = _pair(params)
    if side == LOWER:
        if r == 1:
            return {1: Fraction(1)}
        return {r - d: pe_pmf(r, (theta, 1), d) for d in range(1, r + 1)}
    if side == UPPER:
        if r == n:
            return {n: Fraction(1)}
        return {r + d: pe_pmf(n - r + 1, (zeta, 1), d) for d in range(1, n - r + 2)}
    raise ArgumentError(f"Side '{side}' not recognized.")


def position_chain_step(v, n, params):
    """
    Value of a fixed position when the size grows from n-1 to n: it moves from
    v to v+1 with probability (v - 1 + theta) / (n - 2 + theta + zeta).
    """
    theta, zeta = _pair(params)
    if not 1 <= v <= n - 1:
        raise ArgumentError(f"Value v={v} is out of the range [1, {n - 1}].")
    up = (v - 1 + theta) / (n - 2 + theta + zeta)
    return {v + 1: up, v: 1 - up}
