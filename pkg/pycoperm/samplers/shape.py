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
Two sided shapes and the ranking construction

A shape is the nondecreasing sequence rho_{-K} <= ... <= rho_0 <= ... <= rho_K
in [0, 1] that the scaled record values converge to. Its random version is a
beta stick-breaking on both sides of a beta(theta, zeta) center.

Given a shape, X_1 = rho_0 and every later uniform W either falls above the
current maximum rho_u, and then contributes rho_{u+1}, below the current
minimum rho_{-l}, and then contributes rho_{-l-1}, or is kept as it is. The
ranking of the X values is the permutation.
"""

import json
from fractions import Fraction

import numpy as np

from .rng import get_rng, beta
from .sampler import Sampler, check_size
from ..errors import ArgumentError, ValidationError, InvalidEncodingError, TruncationError
from ..exact.enumeration import pushforward_table
from ..exact.laws import ShapeLaw, make_law
from ..exact.params import as_general
from ..records import from_initial_ranks, rank_order, constant_prefix_length, LOW, HIGH

DEFAULT_DEPTH = 64


class TwoSidedShape:
    """
    Truncated two sided shape.

    Parameters
    ----------
    rho : sequence of float
        rho_{-K_lower}, ..., rho_0, ..., rho_{K_upper}, nondecreasing in [0, 1].
    center_index : int
        Position of rho_0 in rho, i.e. K_lower.
    """

    def __init__(self, rho, center_index):
        self._rho = np.asarray(rho, dtype=np.float64)
        self._center = int(center_index)
        if self._rho.ndim != 1 or not 0 <= self._center < len(self._rho):
            raise ValidationError(f"Center index {center_index} is not valid for {len(self._rho)} shape values.")
        if not np.all(np.isfinite(self._rho)) or self._rho[0] < 0 or self._rho[-1] > 1:
            raise ValidationError("Shape values must lie in [0, 1].")
        if np.any(np.diff(self._rho) < 0):
            raise ValidationError("Shape values must be nondecreasing.")
        self._exact = [Fraction(float(x)) for x in self._rho]

    @classmethod
    def from_file(cls, path):
        """Reads a {"rho": [...], "center_index": i} JSON shape file."""
        try:
            with open(path) as f:
                data = json.load(f)
            return cls(data["rho"], data["center_index"])
        except (OSError, ValueError, KeyError, TypeError) as e:
            raise InvalidEncodingError(f"Could not read shape file '{path}': {e}")

    @property
    def depth_lower(self):
        return self._center

    @property
    def depth_upper(self):
        return len(self._rho) - self._center - 1

    def _index(self, k):
        if not -self.depth_lower <= k <= self.depth_upper:
            raise TruncationError(f"rho_{k} is beyond the shape truncation "
                                  f"({self.depth_lower} lower, {self.depth_upper} upper).")
        return self._center + k

    def rho(self, k):
        return float(self._rho[self._index(k)])

    def rho_exact(self, k):
        """rho_k as the exact rational value of the stored float."""
        return self._exact[self._index(k)]

    def gap(self, k):
        """p_k = rho_k - rho_{k-1} for k > 0 and rho_{k+1} - rho_k for k < 0."""
        return float(self.gap_exact(k))

    def gap_exact(self, k):
        if k > 0:
            return self.rho_exact(k) - self.rho_exact(k - 1)
        if k < 0:
            return self.rho_exact(k + 1) - self.rho_exact(k)
        raise ArgumentError("The center has no gap.")

    @property
    def tail_lower(self):
        """Mass below rho_{-K}."""
        return float(self._rho[0])

    @property
    def tail_upper(self):
        """Mass above rho_K."""
        return 1.0 - float(self._rho[-1])

    def gaps(self):
        return {k: self.gap(k) for k in range(-self.depth_lower, self.depth_upper + 1) if k != 0}

    def values(self):
        return self._rho.copy()

    def to_dict(self):
        return {"rho": [float(x) for x in self._rho], "center_index": self._center,
                "tail_lower": self.tail_lower, "tail_upper": self.tail_upper}

    def __repr__(self):
        return f"TwoSidedShape(center={self.rho(0)}, K=({self.depth_lower}, {self.depth_upper}))"


def draw_shape(params, rng, depth=DEFAULT_DEPTH, depth_upper=None):
    """
    Stick-breaking draw: rho_0 ~ beta(theta, zeta), then K lower factors
    T_{-m} ~ beta(theta + alpha_{-1} + ... + alpha_{-m}, 1 - alpha_{-m}) and K
    upper factors Z_m ~ beta(zeta + alpha_1 + ... + alpha_m, 1 - alpha_m).
    """
    depth_upper = depth if depth_upper is None else depth_upper
    if depth < 1 or depth_upper < 1:
        raise ArgumentError(f"The shape depth K must be at least 1 (got {depth}, {depth_upper}).")
    params = as_general(params)
    # Running side weights, one alpha added per level
    lower_weight, upper_weight = float(params.theta), float(params.zeta)
    rho0 = beta(rng, params.theta, params.zeta)
    lower = [rho0]
    for m in range(1, depth + 1):
        alpha = float(params(-m))
        lower_weight += alpha
        lower.append(lower[-1] * beta(rng, lower_weight, 1 - alpha))
    upper = [rho0]
    for m in range(1, depth_upper + 1):
        alpha = float(params(m))
        upper_weight += alpha
        upper.append(1.0 - (1.0 - upper[-1]) * beta(rng, upper_weight, 1 - alpha))
    return TwoSidedShape(lower[:0:-1] + upper, depth)


def sample_shape(params, depth, seed):
    return draw_shape(params, get_rng(seed), depth)


def shape_sequence(shape, n, rng):
    """
    Returns the X values of the ranking construction and, for every position
    after the first, the event that produced it ('low', 'high' or None).
    """
    xs = [shape.rho(0)]
    events = []
    l = u = 0
    for w in rng.random(n - 1):
        if w > shape.rho(u):
            u += 1
            if u > shape.depth_upper:
                raise TruncationError(f"An upper record needs rho_{u}, the shape is truncated at "
                                      f"{shape.depth_upper}; enlarge K.")
            xs.append(shape.rho(u))
            events.append(HIGH)
        elif w < shape.rho(-l):
            l += 1
            if l > shape.depth_lower:
                raise TruncationError(f"A lower record needs rho_{-l}, the shape is truncated at "
                                      f"{shape.depth_lower}; enlarge K.")
            xs.append(shape.rho(-l))
            events.append(LOW)
        else:
            xs.append(float(w))
            events.append(None)
    return xs, events


def draw_from_shape(shape, n, rng):
    xs, events = shape_sequence(shape, n, rng)
    m = constant_prefix_length(xs)
    # Inside a constant run only a zero-probability W can be kept unchanged
    tiebreak = [event or HIGH for event in events[:m - 1]]
    return from_initial_ranks(rank_order(xs, tiebreak))


def sample_from_shape(shape, n, seed):
    return draw_from_shape(shape, check_size(n), get_rng(seed))


class ShapeSampler(Sampler):
    """Draws a fresh random shape for every permutation, which gives back the step-law model."""

    name = "from-shape"

    def __init__(self, params, depth=DEFAULT_DEPTH):
        self.params = params
        self.depth = depth

    def draw(self, n, rng):
        # A permutation of [n] reads at most n - 1 levels on each side
        depth = max(1, min(self.depth, n - 1))
        return draw_from_shape(draw_shape(self.params, rng, depth), n, rng)

    def exact_table(self, n, jobs=1, comm=None):
        return pushforward_table(n, make_law(self.params), jobs, comm)

    def describe(self):
        return {"model": self.name, "K": self.depth, **self.params.to_dict()}


class FixedShapeSampler(Sampler):
    """Ranking construction with a given shape (e.g. read from a shape file)."""

    name = "from-shape-fixed"

    def __init__(self, shape):
        self.shape = shape

    def draw(self, n, rng):
        return draw_from_shape(self.shape, n, rng)

    def exact_table(self, n, jobs=1, comm=None):
        return pushforward_table(n, ShapeLaw(self.shape), jobs, comm)

    def describe(self):
        return {"model": self.name, "shape": self.shape.to_dict()}
