"""
PyCoPerm parser

The parser in this module is used by 'pycoperm_run' to parse the command line
arguments.

It is also loaded by CommandConfig to obtain the default values of the options
that are not given, so a configuration built from Python code (without the
command line) has the same defaults as one built by 'pycoperm_run'.

If you want to define a new option, just declare it here. It will
automatically be available as a CommandConfig attribute.
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

import argparse

from .samplers.shape import DEFAULT_DEPTH

COMMANDS = ("sample", "exact", "verify", "mc")
QUANTITIES = ("table", "stirling", "pe", "d", "dext", "ratio", "phi", "followers", "count-compositions",
              "extension-count", "chain", "w")
FORMATS = ("text", "table", "json", "csv")


def bool_lambda(x):
    """Returns True if command line value is any of true, 1, or yes"""
    return str(x).lower() in ['true', '1', 'yes']


_desc = "Samples, tabulates and verifies coherent random permutations and their records."
_epilogue = """Rational values (theta, zeta, alpha, p) are written as 'a', 'a/b' or
decimals. Alpha: 'k:v,k:v,...;tail:v' ('tail-' and 'tail+' set one side only).
Compositions: parts separated by ',' with the center marked by '^', e.g.
'3,1,^1,3,2'. Record profiles: values with the center between brackets, e.g.
'1,2,[3],7,8'. Limit families: 'kind:parameter', e.g. 'bernoulli-pyramid:1/2'.
Shape files: JSON {"rho": [...], "center_index": i}."""

# Parser and the supported arguments with their default values
parser = argparse.ArgumentParser(prog="pycoperm_run", description=_desc, epilog=_epilogue)
parser.add_argument('command', nargs='?', choices=COMMANDS, default="sample")
parser.add_argument('quantity', nargs='?', choices=QUANTITIES, default=None)

# Model options
_md_group = parser.add_argument_group("Model options")
_md_group.add_argument('--model', type=str, default="two-param")
_md_group.add_argument('--theta', type=str, default="1")
_md_group.add_argument('--zeta', type=str, default="1")
_md_group.add_argument('--alpha', type=str, default="")
_md_group.add_argument('--family', type=str, default=None)
_md_group.add_argument('--p', type=str, default=None)
_md_group.add_argument('--shape-file', '--shape_file', dest="shape_file", type=str, default=None)
_md_group.add_argument('--k_max', type=int, default=DEFAULT_DEPTH)

# Sampling options
_sm_group = parser.add_argument_group("Sampling options")
_sm_group.add_argument('--n', type=int, default=None)
_sm_group.add_argument('--trials', type=int, default=None)
_sm_group.add_argument('--seed', type=int, default=0)
_sm_group.add_argument('--progress', type=bool_lambda, default=False)

# Exact options
_ex_group = parser.add_argument_group("Exact options")
_ex_group.add_argument('--composition', type=str, default=None)
_ex_group.add_argument('--composition2', type=str, default=None)
_ex_group.add_argument('--profile', type=str, default=None)
_ex_group.add_argument('--l', type=int, default=None)
_ex_group.add_argument('--u', type=int, default=None)
_ex_group.add_argument('--n2', type=int, default=None)
_ex_group.add_argument('--l2', type=int, default=None)
_ex_group.add_argument('--u2', type=int, default=None)
_ex_group.add_argument('--r', type=int, default=None)
_ex_group.add_argument('--side', type=str, default="lower")

# Verification options
_vr_group = parser.add_argument_group("Verification options")
_vr_group.add_argument('--suite', type=str, default="all")
_vr_group.add_argument('--experiment', type=str, default="shape-convergence")
_vr_group.add_argument('--max-n', '--max_n', dest="max_n", type=int, default=None)

# Output options
_ou_group = parser.add_argument_group("Output options")
_ou_group.add_argument('--format', type=str, choices=FORMATS, default=None)
_ou_group.add_argument('--output', type=str, default=None)
_ou_group.add_argument('--show_options', type=bool_lambda, default=False)
_ou_group.add_argument('--verbose', type=bool_lambda, default=False)

# Parallel execution options
_pe_group = parser.add_argument_group("Parallel execution options")
_pe_group.add_argument('--jobs', type=int, default=1)
_pe_group.add_argument('--parallel', type=str, default="sequential")

# Tracing and profiling
_tr_group = parser.add_argument_group("Tracing options")
_tr_group.add_argument('--tracing', type=bool_lambda, default=False)
_tr_group.add_argument('--tracer_output', type=str, default="")
_tr_group.add_argument('--profile_run', type=bool_lambda, default=False)
