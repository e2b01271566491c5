"""
PyCoPerm records core

Permutations, their initial ranks, record profiles, centered compositions and
the classical projections and bijections between them.
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

from .bijections import classical_project, hat_bijection, fold_records, cycles, \
    ONE_ROW_DELETE, CYCLE_DELETE, FORWARD, INVERSE
from .permutation import Permutation, InitialRanks, to_initial_ranks, from_initial_ranks, restrict, \
    complement, reverse_word, inverse
from .profile import RecordProfile, CenteredComposition, OrderedPartition, extract_records, \
    profile_composition, ordered_blocks, block_index
from .ranking import rank_order, constant_prefix_length, LOW, HIGH
