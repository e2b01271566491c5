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

# ---
PYCOPERM_RUN_EVENT = 61000001
PYCOPERM_RUN_EVENTS = 4
(PYCOPERM_RUN_SAMPLE,
 PYCOPERM_RUN_EXACT,
 PYCOPERM_RUN_VERIFY,
 PYCOPERM_RUN_MC) = range(1, PYCOPERM_RUN_EVENTS + 1)
# ---
PYCOPERM_OPS_EVENT = 61000002
PYCOPERM_OPS_EVENTS = 5
(PYCOPERM_OPS_ENUMERATION,
 PYCOPERM_OPS_SAMPLING,
 PYCOPERM_OPS_BATCH,
 PYCOPERM_OPS_COMPARE,
 PYCOPERM_OPS_OUTPUT) = range(1, PYCOPERM_OPS_EVENTS + 1)
# --- values are given to the suites and experiments by define_event_types()
PYCOPERM_SUITE_EVENT = 61000003
PYCOPERM_EXPERIMENT_EVENT = 61000004
