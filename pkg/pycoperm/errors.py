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
PyCoPerm errors

Every error raised by the library derives from PycopermError, which is itself a
ValueError, so callers that only expect ValueError keep working.
"""


class PycopermError(ValueError):
    """Base class of the PyCoPerm errors"""
    pass


class InvalidEncodingError(PycopermError):
    """An initial rank, word or composition string does not encode a valid object"""
    pass


class ArgumentError(PycopermError):
    """An argument is out of its allowed range"""
    pass


class ValidationError(PycopermError):
    """A record profile, composition or shape violates its invariants"""
    pass


class DomainError(PycopermError):
    """Model parameters outside the principal domain"""
    pass


class OrderError(PycopermError):
    """The second composition does not follow the first one in the poset"""
    pass


class ResourceError(PycopermError):
    """A configured size or trial cap would be exceeded"""
    pass


class TruncationError(PycopermError):
    """A truncated shape ran out of entries"""
    pass


class InvalidSequenceError(PycopermError):
    """A real sequence repeats a value that is not a running extreme"""
    pass
