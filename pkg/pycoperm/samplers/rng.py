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
Random number generation

All the samplers draw from numpy PCG64 generators built from a SeedSequence,
so a 64-bit seed fully determines every output. Parallel work gets child
sequences through SeedSequence.spawn, the i-th child depending only on the
seed and on i.
"""

import numpy as np

from ..errors import ArgumentError

SEED_LIMIT = 2 ** 64


def check_seed(seed):
    try:
        seed = int(seed)
    except (TypeError, ValueError):
        raise ArgumentError(f"Seed '{seed}' is not an unsigned 64-bit integer.")
    if not 0 <= seed < SEED_LIMIT:
        raise ArgumentError(f"Seed {seed} is not an unsigned 64-bit integer.")
    return seed


def get_rng(seed):
    """Returns a PCG64 generator for a seed, a SeedSequence, or a generator (returned as is)."""
    if isinstance(seed, np.random.Generator):
        return seed
    if isinstance(seed, np.random.SeedSequence):
        return np.random.Generator(np.random.PCG64(seed))
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(check_seed(seed))))


def spawn_seeds(seed, count):
    """count independent child SeedSequences of seed."""
    return np.random.SeedSequence(check_seed(seed)).spawn(count)


def spawn_rngs(seed, count):
    return [get_rng(child) for child in spawn_seeds(seed, count)]


def beta(rng, a, b):
    """
    Beta(a, b) variate: U^(1/a) when b = 1, otherwise G_a / (G_a + G_b) with
    standard gamma variates.
    """
    a, b = float(a), float(b)
    if b == 1.0:
        return rng.random() ** (1.0 / a)
    x = rng.standard_gamma(a)
    y = rng.standard_gamma(b)
    return x / (x + y)


def beta_array(rng, a, b, size):
    a, b = float(a), float(b)
    if b == 1.0:
        return rng.random(size) ** (1.0 / a)
    x = rng.standard_gamma(a, size)
    y = rng.standard_gamma(b, size)
    return x / (x + y)
