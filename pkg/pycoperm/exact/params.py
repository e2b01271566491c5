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
Model parameters

TwoParam holds (theta, zeta). GeneralParams adds the alpha tilts of the record
blocks, alpha_k for k != 0, given by finitely many explicit values and tail
defaults for the indices beyond them.
"""

import re
from fractions import Fraction

from ..errors import DomainError, ArgumentError
from ..utils import parse_rational, format_rational


class TwoParam:

    def __init__(self, theta, zeta):
        self.theta = parse_rational(theta, "theta")
        self.zeta = parse_rational(zeta, "zeta")
        if self.theta <= 0 or self.zeta <= 0:
            raise DomainError(f"theta and zeta must be positive (got theta={self.theta}, zeta={self.zeta}).")

    @property
    def eta(self):
        """Record intensity theta + zeta."""
        return self.theta + self.zeta

    @property
    def lower_probability(self):
        """Probability that a record is a lower one."""
        return self.theta / (self.theta + self.zeta)

    def swapped(self):
        return TwoParam(self.zeta, self.theta)

    def to_dict(self):
        return {"theta": format_rational(self.theta), "zeta": format_rational(self.zeta)}

    def __eq__(self, other):
        return isinstance(other, TwoParam) and (self.theta, self.zeta) == (other.theta, other.zeta)

    def __hash__(self):
        return hash((self.theta, self.zeta))

    def __repr__(self):
        return f"TwoParam(theta={self.theta}, zeta={self.zeta})"


_alpha_item = re.compile(r"^(tail[+-]?|-?\d+)\s*:\s*(\S+)$")


class GeneralParams:
    """
    Parameters (theta, zeta, alpha) of the alpha-tilted family.

    Parameters
    ----------
    theta, zeta : rational
    alpha : dict, optional
        Explicit values alpha_k, k != 0 (alpha_0 is ignored).
    tail : rational
        Value of alpha_k for the indices without an explicit value.
    tail_lower, tail_upper : rational, optional
        Override tail for k < 0 and for k > 0, respectively.
    """

    def __init__(self, theta, zeta, alpha=None, tail=0, tail_lower=None, tail_upper=None):
        self.theta = parse_rational(theta, "theta")
        self.zeta = parse_rational(zeta, "zeta")
        self.alpha = {int(k): parse_rational(v, f"alpha_{k}") for k, v in (alpha or {}).items() if int(k) != 0}
        tail = parse_rational(tail, "alpha tail")
        self.tail_lower = parse_rational(tail_lower, "alpha lower tail") if tail_lower is not None else tail
        self.tail_upper = parse_rational(tail_upper, "alpha upper tail") if tail_upper is not None else tail
        self.check_principal_domain()

    @classmethod
    def parse(cls, theta, zeta, text):
        """
        Builds the parameters from the 'k:v,k:v,...;tail:v' grammar.

        Items may be separated by ',' or ';'. Besides 'tail', the keys 'tail-'
        and 'tail+' set the tail of the lower and upper side only.
        """
        alpha = {}
        tails = {}
        for item in re.split(r"[,;]", str(text or "")):
            item = item.strip()
            if item == "":
                continue
            match = _alpha_item.match(item)
            if match is None:
                raise ArgumentError(f"Could not parse alpha item '{item}', expected 'k:v' or 'tail:v'.")
            key, value = match.groups()
            if key.startswith("tail"):
                tails[key] = value
            else:
                alpha[int(key)] = value
        return cls(theta, zeta, alpha, tail=tails.get("tail", 0),
                   tail_lower=tails.get("tail-"), tail_upper=tails.get("tail+"))

    def __call__(self, k):
        """alpha_k"""
        if k in self.alpha:
            return self.alpha[k]
        return self.tail_lower if k < 0 else self.tail_upper

    def lower_weight(self, l):
        """theta + alpha_{-1} + ... + alpha_{-l}"""
        return self.theta + sum((self(-i) for i in range(1, l + 1)), Fraction(0))

    def upper_weight(self, u):
        """zeta + alpha_1 + ... + alpha_u"""
        return self.zeta + sum((self(i) for i in range(1, u + 1)), Fraction(0))

    def check_principal_domain(self):
        """Checks the strict positivity conditions for every index, using the tails beyond the explicit ones."""
        if self.theta <= 0 or self.zeta <= 0:
            raise DomainError(f"theta and zeta must be positive (got theta={self.theta}, zeta={self.zeta}).")
        for k, a in list(self.alpha.items()) + [(-1, self.tail_lower), (1, self.tail_upper)]:
            if 1 - a <= 0:
                raise DomainError(f"alpha_{k}={a} must be lower than 1.")
        for side, tail in ((-1, self.tail_lower), (1, self.tail_upper)):
            explicit = [abs(k) for k in self.alpha if k * side > 0]
            depth = max(explicit, default=0)
            for m in range(depth + 1):
                weight = self.lower_weight(m) if side < 0 else self.upper_weight(m)
                if weight <= 0:
                    raise DomainError(f"Partial sum of the {'lower' if side < 0 else 'upper'} weights "
                                      f"vanishes or is negative at depth {m}.")
            if tail < 0:
                raise DomainError(f"A negative alpha tail ({tail}) makes the partial sums eventually negative.")

    @property
    def is_two_param(self):
        return all(a == 0 for a in self.alpha.values()) and self.tail_lower == 0 and self.tail_upper == 0

    def to_two_param(self):
        return TwoParam(self.theta, self.zeta)

    def to_dict(self):
        result = {"theta": format_rational(self.theta), "zeta": format_rational(self.zeta),
                  "alpha": {str(k): format_rational(v) for k, v in sorted(self.alpha.items())}}
        result["tail-"] = format_rational(self.tail_lower)
        result["tail+"] = format_rational(self.tail_upper)
        return result

    def __repr__(self):
        return (f"GeneralParams(theta={self.theta}, zeta={self.zeta}, alpha={self.alpha}, "
                f"tail-={self.tail_lower}, tail+={self.tail_upper})")


def as_general(params):
    """Promotes TwoParam to GeneralParams with alpha = 0."""
    if isinstance(params, GeneralParams):
        return params
    return GeneralParams(params.theta, params.zeta)
