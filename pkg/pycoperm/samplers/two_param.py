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

from .sampler import StepLawSampler
from ..exact.laws import TwoParamLaw
from ..exact.params import TwoParam


class TwoParamSampler(StepLawSampler):
    """P^(theta, zeta): independent initial ranks, rank 1 with weight theta and rank j with weight zeta"""

    name = "two-param"

    def __init__(self, params):
        if not isinstance(params, TwoParam):
            params = TwoParam(params.theta, params.zeta)
        self.params = params
        super().__init__(TwoParamLaw(params))


def sample_two_param(n, params, seed):
    return TwoParamSampler(params).sample(n, seed)
