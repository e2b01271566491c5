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
Poset of centered compositions

Growing a permutation by one entry moves its centered composition to one of
its immediate followers: a new part 1 on either side, or one noncentral part
incremented. Saturated chains from lambda to mu count coherent extensions.
"""

import itertools
import math
from fractions import Fraction

from ..errors import OrderError
from ..records import CenteredComposition
from ..utils import falling


def ordinary_compositions(a):
    """Yields the compositions of a >= 0 as tuples (the empty one for a = 0)."""
    if a == 0:
        yield ()
        return
    for cuts in itertools.product((False, True), repeat=a - 1):
        parts, size = [], 1
        for cut in cuts:
            if cut:
                parts.append(size)
                size = 1
            else:
                size += 1
        parts.append(size)
        yield tuple(parts)


def centered_compositions(n):
    """Yields every centered composition of n."""
    for a in range(n):
        for left in ordinary_compositions(a):
            for right in ordinary_compositions(n - 1 - a):
                yield CenteredComposition(left + (1,) + right, len(left))


def composition_count(n):
    """Number of centered compositions of n by enumeration."""
    return sum(1 for _ in centered_compositions(n))


def composition_count_formula(n):
    """2^(n-3) (n+2), valid for n >= 2."""
    return Fraction(2) ** (n - 3) * (n + 2)


def followers(composition):
    """Immediate followers: prepend 1, increment each noncentral part, append 1."""
    parts, l = list(composition.parts), composition.lower_count
    result = [CenteredComposition([1] + parts, l + 1)]
    for index in range(len(parts)):
        if index != l:
            grown = list(parts)
            grown[index] += 1
            result.append(CenteredComposition(grown, l))
    result.append(CenteredComposition(parts + [1], l))
    return result


def d_count(composition):
    """(n-1)! / (Lambda_{-l} ... Lambda_{-1} Lambda_1 ... Lambda_u)"""
    denominator = 1
    for k, _ in composition.noncentral():
        denominator *= composition.tail_sum(k)
    return math.factorial(composition.degree - 1) // denominator


def check_successor(small, big):
    """Raises OrderError unless big is reachable from small in the poset."""
    b = big.lower_count - small.lower_count
    a = big.upper_count - small.upper_count
    if a < 0 or b < 0 or any(big.part(k) < small.part(k) for k in small.indices()):
        raise OrderError(f"{big} does not follow {small} in the composition poset.")
    return b, a


def d_ext(small, big):
    """
    Number of saturated chains from small to big:
    (m-n)! prod_k C(mu_k - 1, lambda_k - 1) / (M_{-l-b} ... M_{-l-1} M_{u+1} ... M_{u+a}).
    """
    b, a = check_successor(small, big)
    l, u = small.lower_count, small.upper_count
    numerator = math.factorial(big.degree - small.degree)
    for k in small.indices():
        numerator *= math.comb(big.part(k) - 1, small.part(k) - 1)
    denominator = 1
    for k in itertools.chain(range(-l - b, -l), range(u + 1, u + a + 1)):
        denominator *= big.tail_sum(k)
    return numerator // denominator


def martin_ratio(small, big):
    """
    d_ext(small, big) / d_count(big) as the closed form

        prod_k (mu_k - 1)_{lambda_k - 1 falling} / (lambda_k - 1)!  *  prod_{k != 0} M_k
        / (m - 1)_{n - 1 falling},

    the product of tail sums running over the indices of small.
    """
    check_successor(small, big)
    value = Fraction(1)
    for k in small.indices():
        value *= Fraction(falling(big.part(k) - 1, small.part(k) - 1), math.factorial(small.part(k) - 1))
        if k != 0:
            value *= big.tail_sum(k)
    return value / falling(big.degree - 1, small.degree - 1)


def phi_boundary(composition, shape):
    """
    Weight of a saturated chain ending at the composition under a fixed shape:
    prod_{k<0} rho_{k+1} p_k^(lambda_k - 1) * prod_{k>0} (1 - rho_{k-1}) p_k^(lambda_k - 1).
    """
    value = 1.0
    for k, part in composition.noncentral():
        if k < 0:
            value *= shape.rho(k + 1) * shape.gap(k) ** (part - 1)
        else:
            value *= (1.0 - shape.rho(k - 1)) * shape.gap(k) ** (part - 1)
    return value


def permutation_weight_from_shape(composition, shape):
    """Probability of one permutation with the given composition under the fixed shape."""
    return phi_boundary(composition, shape) / math.prod(
        math.factorial(part - 1) for _, part in composition.noncentral())
