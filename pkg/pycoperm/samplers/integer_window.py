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

from .sampler import Sampler
from ..exact.enumeration import window_pushforward_table
from ..exact.window import check_window_params, window_sequence
from ..records import from_initial_ranks, rank_order


class WindowSampler(Sampler):
    """
    Ranks the window projection of d = theta + zeta - 2 prehistoric uniforms
    followed by n stream uniforms. Integer theta, zeta >= 1 only.
    """

    name = "integer-window"

    def __init__(self, theta, zeta):
        self.theta, self.zeta = check_window_params(theta, zeta)

    def draw(self, n, rng):
        d = self.theta + self.zeta - 2
        xs = window_sequence(rng.random(d + n).tolist(), self.theta, self.zeta)
        return from_initial_ranks(rank_order(xs))

    def exact_table(self, n, jobs=1, comm=None):
        return window_pushforward_table(n, self.theta, self.zeta, jobs, comm)

    def describe(self):
        return {"model": self.name, "theta": self.theta, "zeta": self.zeta}


def sample_integer_window(n, theta, zeta, seed):
    return WindowSampler(theta, zeta).sample(n, seed)
