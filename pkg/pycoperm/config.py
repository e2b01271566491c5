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
Command configuration

CommandConfig holds the options of one pycoperm_run invocation. It starts
from the parser defaults and is updated with the received keyword arguments,
so library users can build one without the command line:

    config = CommandConfig(command="sample", model="two-param", theta="2", zeta="3", n=5)
"""

from .errors import ArgumentError, ResourceError
from .exact.enumeration import ENUMERATION_CAP
from .exact.params import TwoParam, GeneralParams
from .parser import parser, COMMANDS, QUANTITIES
from .records import RecordProfile, CenteredComposition
from .samplers import LimitFamily, TwoSidedShape, MODELS
from .tracers import get_tracer
from .utils import parse_rational

# Largest permutation written as a word by 'sample' unless --max-n raises it
WORD_CAP = 20

# Quantities of 'exact' whose cost grows with n! and their caps
_ENUMERATED = {"table": ENUMERATION_CAP}


class CommandConfig:

    def __init__(self, comm=None, **kwargs):
        # Get default values from parser and update them from the received kwargs
        self.kwargs = vars(parser.parse_args([]))
        self.kwargs.update(kwargs)
        self.comm = comm
        self.validate()
        self.tracer = get_tracer(self)

    def __getattr__(self, item):
        try:
            return self.__dict__["kwargs"][item]
        except KeyError:
            raise AttributeError(f"'CommandConfig' object has no attribute '{item}'") from None

    def options(self):
        return dict(self.kwargs)

    def validate(self):
        """Parses the model parameters and checks the caps before any dispatch."""
        if self.command not in COMMANDS:
            raise ArgumentError(f"Command '{self.command}' not recognized.")
        if self.command == "exact" and self.quantity not in QUANTITIES:
            raise ArgumentError(f"'exact' needs one of: {', '.join(QUANTITIES)}.")
        if self.command != "exact" and self.quantity is not None:
            raise ArgumentError(f"Quantity '{self.quantity}' is only valid for 'exact'.")
        for name in ("n", "trials", "max_n", "jobs"):
            value = self.kwargs.get(name)
            if value is not None and value < 1:
                raise ArgumentError(f"--{name} must be positive (got {value}).")
        if self.side not in ("lower", "upper"):
            raise ArgumentError(f"Side '{self.side}' not recognized, use 'lower' or 'upper'.")
        if self.parallel not in ("sequential", "data"):
            raise ValueError(f"Parallel option '{self.parallel}' not recognized.")
        if self.tracing and not self.tracer_output:
            raise ArgumentError("--tracing needs --tracer_output.")
        if self.format is None:
            self.kwargs["format"] = "text" if self.command == "sample" else "table"
        if self.command == "sample":
            if self.model not in MODELS:
                raise ValueError(f"Model '{self.model}' not recognized.")
            if self.n is None and self.model != "conditioned":
                raise ArgumentError("'sample' needs --n.")
            cap = max(WORD_CAP, self.max_n or 0)
            if self.n is not None and self.n > cap:
                raise ResourceError(f"n={self.n} exceeds the word cap {cap} (raise it with --max-n).")
        if self.command == "exact" and self.quantity in _ENUMERATED and self.n is not None:
            if self.n > _ENUMERATED[self.quantity]:
                raise ResourceError(f"n={self.n} exceeds the enumeration cap {_ENUMERATED[self.quantity]}.")
        # Parameters are parsed now so that errors are reported before running
        self.params()

    # Model parameters

    def two_param(self):
        return TwoParam(self.theta, self.zeta)

    def general_params(self):
        return GeneralParams.parse(self.theta, self.zeta, self.alpha)

    def params(self):
        """GeneralParams when --alpha is given, TwoParam otherwise."""
        return self.general_params() if self.alpha else self.two_param()

    def limit_family(self):
        if self.family is None:
            raise ArgumentError("The limit model needs --family kind:parameter.")
        return LimitFamily.parse(self.family)

    def probability(self):
        if self.p is None:
            raise ArgumentError("This model needs --p.")
        p = parse_rational(self.p, "p")
        if not 0 <= p <= 1:
            raise ArgumentError(f"p={p} must be in [0, 1].")
        return p

    def shape(self):
        if self.shape_file is None:
            raise ArgumentError("The fixed shape model needs --shape-file.")
        return TwoSidedShape.from_file(self.shape_file)

    def composition(self, name="composition"):
        text = self.kwargs.get(name)
        if text is None:
            raise ArgumentError(f"This quantity needs --{name}.")
        return CenteredComposition.parse(text)

    def record_profile(self):
        """Record profile from --profile, or from --composition."""
        if self.profile is not None:
            return RecordProfile.parse(self.profile)
        if self.composition_text is not None:
            return self.composition().profile()
        raise ArgumentError("The conditioned model needs --profile or --composition.")

    @property
    def composition_text(self):
        return self.kwargs.get("composition")

    def theta_int(self):
        return self._integer("theta")

    def zeta_int(self):
        return self._integer("zeta")

    def _integer(self, name):
        value = parse_rational(self.kwargs[name], name)
        if value.denominator != 1:
            raise ArgumentError(f"The integer window model needs an integer {name} (got {value}).")
        return int(value)

    def required(self, *names):
        """Values of the given options, raising ArgumentError if any is missing."""
        missing = [name for name in names if self.kwargs.get(name) is None]
        if missing:
            raise ArgumentError(f"This quantity needs {', '.join('--' + m for m in missing)}.")
        return [self.kwargs[name] for name in names]
