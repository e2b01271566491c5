"""
Python Coherent Permutations (PyCoPerm)

Random permutations built one position at a time whose record structure is
preserved when they are restricted to a prefix: exact laws, samplers and the
checks that tie them together.
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

from .version import __version__

from . import exact
from . import records
from . import samplers
from . import verify
