"""
PyCoPerm exact combinatorics

Record Stirling numbers, exact step laws and their pushforward tables, the
Polya-Eggenberger laws, and the poset of centered compositions.
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

from .chains import pe_pmf, pe_pmf_printed, pe_law, record_chain_step, record_chain_step_printed, \
    position_chain_step, LOWER, UPPER
from .enumeration import pushforward_table, window_pushforward_table, class_sizes, class_size_bruteforce, \
    coherent_extensions, extension_profiles, ENUMERATION_CAP
from .laws import StepLaw, TwoParamLaw, GeneralLaw, PyramidLaw, SingleRecordLaw, ThetaZeroLaw, ZetaZeroLaw, \
    ShapeLaw, make_law, step_law, literal_step_law, perm_probability, general_perm_probability, \
    general_closed_form, general_printed_form, compare_closed_forms, equal_param_probability, \
    equal_param_probability_printed
from .moments import count_mean, count_variance, count_cumulants, standardized_shape, count_covariance, \
    count_correlation, pair_mean, pair_mean_limit, adjacent_lower_pairs_mean, center_mean, center_variance, \
    shape_mean
from .params import TwoParam, GeneralParams, as_general
from .poset import centered_compositions, composition_count, composition_count_formula, followers, d_count, \
    d_ext, martin_ratio, phi_boundary, permutation_weight_from_shape
from .stirling import record_stirling, record_stirling_identity, record_stirling_table, \
    record_stirling_enumerated, signless_stirling, lower_marginal, check_generating_function, extension_count
from .tables import DistTable, WTable, w_table, w_table_from_tables, check_dual, dual_defects
from .window import window_sequence, window_ranks
