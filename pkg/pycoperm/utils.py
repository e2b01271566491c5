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

import inspect
import os
import sys
from fractions import Fraction
from glob import glob
from importlib import import_module

from .errors import ArgumentError


def log(text):
    """Log a message to stderr."""
    sys.stderr.write(">>> %s\n" % text)


def error(text):
    """Report an error message on stderr."""
    sys.stderr.write("ERROR: %s\n" % text)


def get_module_path(path, base):
    prev_dir, last_dir = os.path.split(path)
    return base if last_dir == base else f"{get_module_path(prev_dir, base)}.{last_dir}"


def get_derived_classes(base_class, module_locals):
    """
    Searches on the python files of a module for classes that are derived from
    the given base_class and automatically exposes them modifying the provided
    module_locals.

    It should be called from the __init__.py file of a module as:

        get_derived_classes(BaseClass, locals())

    Parameters
    ----------
    base_class : class
        The base class to be tested for.
    module_locals: dict
        The locals() dictionary of the caller module.
    Returns
    -------
    Nothing. Modifies the provided module_locals.
    """

    file_name = inspect.stack()[1].filename
    if file_name[-11:] != "__init__.py":
        print("Warning: the 'get_derived_classes()' function should be called from an '__init__.py' file.",
              file=sys.stderr)
    dir_path = os.path.dirname(os.path.realpath(file_name))
    for python_file in sorted(glob(os.path.join(dir_path, '*.py'))):
        assert "pycoperm" in python_file
        directory = get_module_path(python_file, "pycoperm")
        module_path, module_ext = os.path.splitext(directory)
        if "__init__" in directory:
            continue
        module = import_module(module_path)
        for attribute_name in [a_n for a_n in dir(module) if a_n not in module_locals]:
            attribute = getattr(module, attribute_name)
            if inspect.isclass(attribute):
                if issubclass(attribute, base_class):
                    module_locals[attribute_name] = attribute


# Exact arithmetic helpers

def rising(x, k):
    """
    Rising factorial (x)_k = x (x+1) ... (x+k-1), with (x)_0 = 1.

    Works on int and Fraction arguments without leaving exact arithmetic.
    """
    result = Fraction(1)
    for i in range(k):
        result *= x + i
    return result


def falling(x, k):
    """Falling factorial x (x-1) ... (x-k+1), with an empty product for k = 0."""
    result = 1
    for i in range(k):
        result *= x - i
    return result


def parse_rational(text, name="value"):
    """
    Parses an exact rational from strings such as '2', '-1/2', '0.25' or '1e-3'.

    Parameters
    ----------
    text : str, int or Fraction
        The value to be parsed.
    name : str
        Name used on the error message.

    Returns
    -------
    Fraction
    """
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int):
        return Fraction(text)
    if isinstance(text, float):
        return Fraction(str(text))
    try:
        return Fraction(str(text).strip())
    except (ValueError, ZeroDivisionError):
        raise ArgumentError(f"Could not parse {name} '{text}' as a rational number.")


def format_rational(q):
    """Formats a rational as the 'num/den' string used by the JSON and CSV artifacts."""
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def parse_int_list(text, name="list"):
    """Parses a comma separated list of integers."""
    try:
        return [int(x) for x in str(text).replace(" ", "").split(",") if x != ""]
    except ValueError:
        raise ArgumentError(f"Could not parse {name} '{text}' as a comma separated list of integers.")
