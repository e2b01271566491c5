"""
PyCoPerm samplers

If you want to add a new sampler:
    1) create a new Python file in this directory,
    2) define your sampler class as derived from Sampler,
    3) add a lowercase alias on this file and, if it takes new options, a
       branch in get_sampler().
"""

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

import importlib

from .batch import BatchResult, records_batch, run_records_batch
from .conditioned import ConditionedSampler, sample_conditioned, draw_conditioned
from .general import GeneralSampler, sample_general
from .integer_window import WindowSampler, sample_integer_window
from .limit import LimitFamily, LimitSampler, PyramidRiffleSampler, sample_limit, sample_pyramid_riffle
from .rng import get_rng, spawn_seeds, spawn_rngs, check_seed, beta
from .sampler import Sampler, StepLawSampler
from .shape import (TwoSidedShape, ShapeSampler, FixedShapeSampler, draw_shape, sample_shape,
                    shape_sequence, draw_from_shape, sample_from_shape, DEFAULT_DEPTH)
from .stream import StreamState, stream_next, stream
from .two_param import TwoParamSampler, sample_two_param
from ..utils import get_derived_classes

# Search this module for Sampler derived classes and expose them
get_derived_classes(Sampler, locals())

# Aliases (model names with '-' replaced by '_')
two_param = TwoParamSampler
general = GeneralSampler
limit = LimitSampler
pyramid_riffle = PyramidRiffleSampler
from_shape = ShapeSampler
from_shape_fixed = FixedShapeSampler
conditioned = ConditionedSampler
integer_window = WindowSampler

MODELS = ("two-param", "general", "limit", "pyramid-riffle", "from-shape", "from-shape-fixed",
          "conditioned", "integer-window")


def get_sampler(config):
    """Get sampler object from config attributes"""
    samplers_module = importlib.import_module("pycoperm.samplers")
    try:
        _sampler = getattr(samplers_module, config.model.replace("-", "_"))
    except AttributeError:
        _sampler = None
    if _sampler is None or config.model not in MODELS:
        raise ValueError(f"Model '{config.model}' not recognized.")
    if config.model == "two-param":
        return _sampler(config.two_param())
    elif config.model == "general":
        return _sampler(config.general_params())
    elif config.model == "limit":
        return _sampler(config.limit_family())
    elif config.model == "pyramid-riffle":
        return _sampler(config.probability())
    elif config.model == "from-shape":
        return _sampler(config.general_params() if config.alpha else config.two_param(), config.k_max)
    elif config.model == "from-shape-fixed":
        return _sampler(config.shape())
    elif config.model == "conditioned":
        return _sampler(config.record_profile())
    return _sampler(config.theta_int(), config.zeta_int())
