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
Exact finite-n moments of record statistics under P^(theta, zeta)

Position j >= 2 is a lower record with probability a_j = theta / D_j and an
upper one with probability b_j = zeta / D_j, D_j = theta + zeta + j - 2, the
positions being independent. Record counts are then Poisson-binomial and the
pair statistics are sums of products of these probabilities.
"""

import math
from fractions import Fraction

from ..utils import rising


def _probabilities(params, n, side):
    theta, zeta = params.theta, params.zeta
    weight = theta if side == "lower" else zeta
    return [Fraction(weight) / (theta + zeta + j - 2) for j in range(2, n + 1)]


def count_mean(params, n, side="lower", start=2):
    """Exact mean of the number of proper records of one side at positions >= start."""
    return sum((a for j, a in enumerate(_probabilities(params, n, side), start=2) if j >= start), Fraction(0))


def count_variance(params, n, side="lower", start=2):
    return sum((a * (1 - a) for j, a in enumerate(_probabilities(params, n, side), start=2) if j >= start),
               Fraction(0))


def count_cumulants(params, n, side="lower"):
    """First four cumulants of a record count (floats)."""
    k1 = k2 = k3 = k4 = 0.0
    for a in _probabilities(params, n, side):
        a = float(a)
        v = a * (1 - a)
        k1 += a
        k2 += v
        k3 += v * (1 - 2 * a)
        k4 += v * (1 - 6 * v)
    return k1, k2, k3, k4


def standardized_shape(params, n, side="lower"):
    """Exact skewness and excess kurtosis of a record count."""
    _, k2, k3, k4 = count_cumulants(params, n, side)
    if k2 == 0:
        return 0.0, 0.0
    return k3 / k2 ** 1.5, k4 / k2 ** 2


def count_covariance(params, n):
    """Cov(l, u) = -sum theta zeta / D_j^2, both records being excluded at the same position."""
    theta, zeta = params.theta, params.zeta
    return -sum((theta * zeta / (theta + zeta + j - 2) ** 2 for j in range(2, n + 1)), Fraction(0))


def count_correlation(params, n):
    vl, vu = count_variance(params, n, "lower"), count_variance(params, n, "upper")
    if vl == 0 or vu == 0:
        return 0.0
    return float(count_covariance(params, n)) / math.sqrt(float(vl) * float(vu))


def pair_mean(params, n, gap, side="lower"):
    """
    Expected number of pairs of consecutive proper records of one side at
    positions t and t + gap, with no record of that side in between.
    """
    q = [Fraction(0), Fraction(0)] + _probabilities(params, n, side)
    total = Fraction(0)
    for t in range(2, n - gap + 1):
        term = q[t] * q[t + gap]
        for s in range(t + 1, t + gap):
            term *= 1 - q[s]
        total += term
    return total


def pair_mean_limit(params, gap, side="lower"):
    """
    n -> infinity limit of pair_mean: zeta E[(1 - rho_0^gap)] / gap on the
    upper side and theta E[(1 - (1 - rho_0)^gap)] / gap on the lower one,
    rho_0 being beta(theta, zeta).
    """
    theta, zeta = params.theta, params.zeta
    if side == "upper":
        return zeta * (1 - rising(theta, gap) / rising(theta + zeta, gap)) / gap
    return theta * (1 - rising(zeta, gap) / rising(theta + zeta, gap)) / gap


def adjacent_lower_pairs_mean(params, n):
    """theta^2 (1 / (theta + zeta) - 1 / (theta + zeta + n - 2)), the gap 1 lower pairs."""
    theta, zeta = params.theta, params.zeta
    if n < 3:
        return Fraction(0)
    return theta ** 2 * (1 / (theta + zeta) - 1 / (theta + zeta + n - 2))


def center_mean(params):
    """E[rho_0] = theta / (theta + zeta)"""
    return params.theta / (params.theta + params.zeta)


def center_variance(params):
    s = params.theta + params.zeta
    return params.theta * params.zeta / (s * s * (s + 1))


def shape_mean(params, k):
    """
    E[rho_k] for the two-param shape: E[rho_0] (theta / (theta + 1))^|k| for
    k < 0 and 1 - E[1 - rho_0] (zeta / (zeta + 1))^k for k > 0.
    """
    m = center_mean(params)
    if k < 0:
        return m * (params.theta / (params.theta + 1)) ** (-k)
    return 1 - (1 - m) * (params.zeta / (params.zeta + 1)) ** k
