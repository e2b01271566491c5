"""
PyCoPerm verification suites

If you want to add a new suite:
    1) create a new Python file in this directory,
    2) define your suite class as derived from Suite,
    3) add a lowercase alias on this file and its name to SUITES.
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

from .asymptotics import AsymptoticsSuite
from .boundary import BoundarySuite
from .diagram import DiagramSuite
from .dual import DualSuite
from .errata import ErrataSuite
from .identities import IdentitiesSuite
from .indicators import IndicatorsSuite
from .pushforward import PushforwardSuite
from .run_all import AllSuites
from .samplers import SamplersSuite
from .suite import Suite
from .uniformity import UniformitySuite
from ...utils import get_derived_classes

# Search this module for Suite derived classes and expose them
get_derived_classes(Suite, locals())

# Aliases
identities = IdentitiesSuite
pushforward = PushforwardSuite
diagram = DiagramSuite
uniformity = UniformitySuite
indicators = IndicatorsSuite
dual = DualSuite
boundary = BoundarySuite
errata = ErrataSuite
samplers = SamplersSuite
asymptotics = AsymptoticsSuite
all_suites = AllSuites

# Exact suites first, the statistical ones at the end
SUITES = ("identities", "pushforward", "diagram", "uniformity", "indicators", "dual", "boundary", "errata",
          "samplers", "asymptotics", "all")


def suite_class(name):
    suites_module = importlib.import_module("pycoperm.verify.suites")
    if name not in SUITES:
        raise ValueError(f"Suite '{name}' not recognized.")
    return getattr(suites_module, "all_suites" if name == "all" else name)


def get_suite(config):
    """Get suite object from config attributes"""
    return suite_class(config.suite)(config)
