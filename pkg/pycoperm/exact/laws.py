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
Step laws of coherent permutations

A step law gives the distribution of the next initial rank i_j as a function
of the centered composition of the first j-1 entries. Weights are assigned at
block level: the new entry may become a lower record (rank 1), an upper record
(rank j), or join block k, in which case the block weight is split uniformly
over the lambda_k ranks that land in it.

Every law can be evaluated exactly (fractions) and sampled with one uniform
draw per step.
"""

import math
from abc import ABC, abstractmethod
from fractions import Fraction

from .params import TwoParam, GeneralParams
from ..errors import DomainError, TruncationError, ArgumentError
from ..records import CenteredComposition, extract_records, to_initial_ranks
from ..utils import rising, format_rational

ROOT = CenteredComposition([1], 0)


class StepLaw(ABC):
    """Base class of the sequential laws on initial ranks"""

    name = "step-law"
    # False when gap_weights and draw ignore the composition
    needs_state = True

    @abstractmethod
    def gap_weights(self, j, composition):
        """
        Returns (w_lower, w_upper, {k: w_k}) for the j-th entry, j >= 2, given
        the composition of degree j-1. Weights are nonnegative and need not be
        normalized.
        """
        pass

    def rank_law(self, j, composition):
        """Exact law {rank: probability} of i_j, zero entries omitted."""
        if j == 1:
            return {1: Fraction(1)}
        w_lower, w_upper, blocks = self.gap_weights(j, composition)
        total = w_lower + w_upper + sum(blocks.values(), Fraction(0))
        law = {}
        if w_lower:
            law[1] = Fraction(w_lower) / total
        values = composition.record_values()
        for k, w in blocks.items():
            if w:
                share = Fraction(w) / (total * composition.part(k))
                for i in composition.block_slots(k, values):
                    law[i] = share
        if w_upper:
            law[j] = law.get(j, 0) + Fraction(w_upper) / total
        return law

    def draw(self, j, composition, u):
        """Next initial rank from a uniform u in [0, 1)."""
        if j == 1:
            return 1
        w_lower, w_upper, blocks = self.gap_weights(j, composition)
        w_lower, w_upper = float(w_lower), float(w_upper)
        blocks = {k: float(w) for k, w in blocks.items()}
        x = u * (w_lower + w_upper + math.fsum(blocks.values()))
        if x < w_lower:
            return 1
        x -= w_lower
        values = composition.record_values()
        for k in sorted(blocks):
            w = blocks[k]
            if x < w:
                slots = composition.block_slots(k, values)
                return slots[min(int(x / w * len(slots)), len(slots) - 1)]
            x -= w
        if w_upper > 0:
            return j
        # Rounding left x past the last positive weight
        for k in sorted(blocks, reverse=True):
            if blocks[k] > 0:
                return composition.block_slots(k, values)[-1]
        return 1

    def path_probability(self, ranks):
        """Exact probability of a whole initial ranks sequence."""
        probability = Fraction(1)
        composition = ROOT
        for j, i in enumerate(ranks, start=1):
            if j == 1:
                continue
            probability *= self.rank_law(j, composition).get(i, 0)
            if probability == 0:
                return probability
            composition = composition.follower_for_rank(i)
        return probability

    def probability(self, p):
        return self.path_probability(to_initial_ranks(p).ranks)

    def describe(self):
        return {"law": self.name}


class TwoParamLaw(StepLaw):
    """Initial ranks independent, the extreme ranks tilted by theta (lower) and zeta (upper)"""

    name = "two-param"
    needs_state = False

    def __init__(self, params):
        self.params = params

    def gap_weights(self, j, composition):
        return (self.params.theta, self.params.zeta,
                {k: part for k, part in composition.noncentral()})

    def rank_law(self, j, composition=None):
        if j == 1:
            return {1: Fraction(1)}
        theta, zeta = self.params.theta, self.params.zeta
        total = theta + zeta + j - 2
        law = {i: 1 / total for i in range(2, j)}
        law[1] = theta / total
        law[j] = zeta / total
        return law

    def draw(self, j, composition, u):
        if j == 1:
            return 1
        theta, zeta = float(self.params.theta), float(self.params.zeta)
        x = u * (theta + zeta + j - 2)
        if x < theta:
            return 1
        if x < theta + zeta:
            return j
        return min(2 + int(x - theta - zeta), j - 1)

    def describe(self):
        return {"law": self.name, **self.params.to_dict()}


class GeneralLaw(StepLaw):
    """
    Alpha-tilted law: lower weight theta + alpha_{-1} + ... + alpha_{-l}, upper
    weight zeta + alpha_1 + ... + alpha_u and lambda_k - alpha_k for block k.
    """

    name = "general"

    def __init__(self, params):
        self.params = params
        self._lower = [params.lower_weight(0)]
        self._upper = [params.upper_weight(0)]

    def _side_weight(self, cache, side, count):
        while len(cache) <= count:
            cache.append(cache[-1] + self.params(side * len(cache)))
        return cache[count]

    def gap_weights(self, j, composition):
        return (self._side_weight(self._lower, -1, composition.lower_count),
                self._side_weight(self._upper, 1, composition.upper_count),
                {k: part - self.params(k) for k, part in composition.noncentral()})

    def describe(self):
        return {"law": self.name, **self.params.to_dict()}


class PyramidLaw(StepLaw):
    """Bernoulli pyramid: every entry is a record, a lower one with probability p"""

    name = "bernoulli-pyramid"

    def __init__(self, p):
        self.p = Fraction(p)
        if not 0 <= self.p <= 1:
            raise ArgumentError(f"Pyramid probability p={p} must be in [0, 1].")

    def gap_weights(self, j, composition):
        return self.p, 1 - self.p, {}

    def describe(self):
        return {"law": self.name, "p": format_rational(self.p)}


class SingleRecordLaw(StepLaw):
    """
    Single proper record: (1, n) with probability p, (n, 1) otherwise, and the
    remaining entries uniform between them.
    """

    name = "single-record"

    def __init__(self, p):
        self.p = Fraction(p)
        if not 0 <= self.p <= 1:
            raise ArgumentError(f"Single record probability p={p} must be in [0, 1].")

    def gap_weights(self, j, composition):
        if j == 2:
            return 1 - self.p, self.p, {}
        return 0, 0, {k: part for k, part in composition.noncentral()}

    def describe(self):
        return {"law": self.name, "p": format_rational(self.p)}


class ThetaZeroLaw(StepLaw):
    """theta = 0 limit: the first entry is 1 and no proper lower record occurs"""

    name = "theta-zero"

    def __init__(self, zeta):
        self.zeta = Fraction(zeta)
        if self.zeta <= 0:
            raise DomainError(f"zeta must be positive (got {zeta}).")

    def gap_weights(self, j, composition):
        return 0, self.zeta, {k: part for k, part in composition.noncentral()}

    def describe(self):
        return {"law": self.name, "zeta": format_rational(self.zeta)}


class ZetaZeroLaw(StepLaw):
    """zeta = 0 limit: the first entry is n and no proper upper record occurs"""

    name = "zeta-zero"

    def __init__(self, theta):
        self.theta = Fraction(theta)
        if self.theta <= 0:
            raise DomainError(f"theta must be positive (got {theta}).")

    def gap_weights(self, j, composition):
        return self.theta, 0, {k: part for k, part in composition.noncentral()}

    def describe(self):
        return {"law": self.name, "theta": format_rational(self.theta)}


class ShapeLaw(StepLaw):
    """
    Law of the ranking construction driven by a fixed two sided shape: a
    uniform below the current minimum rho_{-l} makes a lower record, above the
    current maximum rho_u an upper record, and otherwise falls in the gap of
    the block it lands in.
    """

    name = "from-shape-fixed"

    def __init__(self, shape):
        self.shape = shape

    def gap_weights(self, j, composition):
        l, u = composition.lower_count, composition.upper_count
        rho = self.shape.rho_exact
        low, high = rho(-l), 1 - rho(u)
        # a new record at full depth would need a value the shape does not hold
        if (l >= self.shape.depth_lower and low > 0) or (u >= self.shape.depth_upper and high > 0):
            raise TruncationError(f"The shape is truncated at K={self.shape.depth_lower}/"
                                  f"{self.shape.depth_upper}, a record at position {j} needs a deeper value.")
        return low, high, {k: self.shape.gap_exact(k) for k, _ in composition.noncentral()}

    def describe(self):
        return {"law": self.name, "center": self.shape.rho(0)}


def make_law(params):
    """Step law for TwoParam or GeneralParams (alpha = 0 reduces to the two-param law)."""
    if isinstance(params, TwoParam):
        return TwoParamLaw(params)
    if isinstance(params, GeneralParams):
        return GeneralLaw(params)
    raise ArgumentError(f"Cannot build a step law from '{params}'.")


def step_law(state, j, params):
    """
    Exact law of i_j given the record profile of the first j-1 entries.

    Parameters
    ----------
    state : RecordProfile or CenteredComposition
    j : int
        Next position; state must have size j-1.
    params : TwoParam or GeneralParams
    """
    composition = state if isinstance(state, CenteredComposition) else state.composition()
    if j >= 2 and composition.degree != j - 1:
        raise ArgumentError(f"State of size {composition.degree} does not precede position {j}.")
    return make_law(params).rank_law(j, composition)


def literal_step_law(state, j, params):
    """
    Per-rank reading of the alpha-tilted step law: every inner rank of block
    k gets (1 - alpha_k) / (theta + zeta + j - 2). It does not normalize as
    soon as a block has more than one entry.
    """
    composition = state if isinstance(state, CenteredComposition) else state.composition()
    total = params.theta + params.zeta + j - 2
    law = {1: params.lower_weight(composition.lower_count) / total,
           j: params.upper_weight(composition.upper_count) / total}
    values = composition.record_values()
    for k, _ in composition.noncentral():
        for i in composition.block_slots(k, values):
            law[i] = (1 - params(k)) / total
    return law


def perm_probability(p, params):
    """theta^l zeta^u / (theta + zeta)_{n-1}"""
    profile = extract_records(p)
    return (params.theta ** profile.lower_count * params.zeta ** profile.upper_count
            / rising(params.theta + params.zeta, p.n - 1))


def equal_param_probability(p, theta):
    """theta^(l+u) / (2 theta)_{n-1}, the theta = zeta case, a function of l+u only."""
    profile = extract_records(p)
    theta = Fraction(theta)
    return theta ** (profile.lower_count + profile.upper_count) / rising(2 * theta, p.n - 1)


def equal_param_probability_printed(p, theta):
    """Same with the normalizer printed as (2 theta)_{n+1}."""
    profile = extract_records(p)
    theta = Fraction(theta)
    return theta ** (profile.lower_count + profile.upper_count) / rising(2 * theta, p.n + 1)


def general_perm_probability(p, params):
    """Path product of the alpha-tilted step law along the initial ranks of p."""
    return GeneralLaw(params).probability(p)


def general_closed_form(composition, params):
    """
    Closed form of the path product: lower and upper record weights at
    creation time, the (1 - alpha_k)_{lambda_k - 1} / (lambda_k - 1)! block
    factors and the (theta + zeta)_{n-1} normalizer.
    """
    value = Fraction(1)
    for c in range(composition.lower_count):
        value *= params.lower_weight(c)
    for c in range(composition.upper_count):
        value *= params.upper_weight(c)
    for k, part in composition.noncentral():
        value *= rising(1 - params(k), part - 1) / math.factorial(part - 1)
    return value / rising(params.theta + params.zeta, composition.degree - 1)


def general_printed_form(composition, params):
    """The printed display: record weights indexed from 1 and no (lambda_k - 1)! divisors."""
    value = Fraction(1)
    for c in range(1, composition.lower_count + 1):
        value *= params.lower_weight(c)
    for c in range(1, composition.upper_count + 1):
        value *= params.upper_weight(c)
    for k, part in composition.noncentral():
        value *= rising(1 - params(k), part - 1)
    return value / rising(params.theta + params.zeta, composition.degree - 1)


def compare_closed_forms(p, params):
    """Path product, closed form and printed display for p, with the printed/path ratio."""
    composition = extract_records(p).composition()
    path = general_perm_probability(p, params)
    printed = general_printed_form(composition, params)
    return {"path": path, "closed": general_closed_form(composition, params), "printed": printed,
            "ratio": printed / path if path else None,
            "factorials": math.prod(math.factorial(part - 1) for _, part in composition.noncentral())}
