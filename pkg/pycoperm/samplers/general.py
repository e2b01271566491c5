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
from ..exact.laws import GeneralLaw
from ..exact.params import as_general


class GeneralSampler(StepLawSampler):
    """
    Alpha-tilted sampler. The block weights lambda_k - alpha_k depend on the
    current composition, which is carried along the draw.
    """

    name = "general"

    def __init__(self, params):
        self.params = as_general(params)
        self.params.check_principal_domain()
        super().__init__(GeneralLaw(self.params))


def sample_general(n, params, seed):
    return GeneralSampler(params).sample(n, seed)
