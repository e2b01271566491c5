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

import sys
from fractions import Fraction


# @warning: must be a function, don't use a @property decorator
def verbose_test():
    """Returns True if unittest has been called with -v or --verbose options."""
    return '-v' in sys.argv or '--verbose' in sys.argv


class P:
    def __init__(self, theta=1, zeta=1, n=4, alpha=None):
        self.theta = Fraction(theta)  # Lower tilt
        self.zeta = Fraction(zeta)  # Upper tilt
        self.n = n  # Permutation size
        self.alpha = alpha  # Alpha grammar string, None for the two-param law

    def __repr__(self):
        alpha = f", alpha={self.alpha}" if self.alpha else ""
        return f"theta={self.theta}, zeta={self.zeta}, n={self.n}{alpha}"


two_param_grid = [
    P(1, 1, 5),
    P(2, 3, 5),
    P(3, 1, 4),
    P("1/2", "5/2", 4),
    P("1/3", 2, 4),
]

general_grid = [
    P(1, 1, 4, "tail:1/2"),
    P(2, 1, 4, "-1:-1/2,1:1/2"),
    P("1/2", 2, 4, "tail-:1/3"),
]

# Worked example used all over the records tests
EXAMPLE_WORD = "3,2,7,6,1,4,8,5"
