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
Every sampler against its exact law

Draws use fixed seeds: the i-th sampler of the suite gets the i-th child of
the suite seed, so adding trials never changes the draws of the other
samplers. The negative control (parameters swapped) must be rejected.
"""

import math
from fractions import Fraction

from .errata import PHI_SHAPE
from .suite import Suite
from ..divergence import compare_exact_empirical, compare_uniform
from ..reports import SIGNIFICANCE, Z_THRESHOLD
from ...exact import TwoParam, GeneralParams, TwoParamLaw, PyramidLaw, d_count, pushforward_table, \
    permutation_weight_from_shape
from ...records import Permutation, CenteredComposition, extract_records, restrict
from ...samplers import TwoParamSampler, GeneralSampler, LimitFamily, LimitSampler, PyramidRiffleSampler, \
    ShapeSampler, FixedShapeSampler, WindowSampler, ConditionedSampler, TwoSidedShape, get_rng, spawn_seeds, \
    stream
from ...tracers import PYCOPERM_OPS_EVENT, PYCOPERM_OPS_SAMPLING, PYCOPERM_OPS_COMPARE

SAMPLER_N = 4
SAMPLER_MAX_N = 5
# Deep enough for every size up to 5, which reads at most 4 levels per side
DEEP_SHAPE = TwoSidedShape([0.01, 0.02, 0.05, 0.1, 0.4, 0.7, 0.9, 0.95, 0.98], 4)
CONDITIONED_CLASS = "3,1,^1,3,2"
PHI_COMPOSITION = "^1,2"
PHI_TOLERANCE = 0.05
STREAM_TRIALS_RATIO = 10


def suite_samplers():
    """(label, sampler) pairs compared with their exact tables at SAMPLER_N."""
    return [
        ("two-param(2,3)", TwoParamSampler(TwoParam(2, 3))),
        ("general(1,1;tail 1/2)", GeneralSampler(GeneralParams(1, 1, tail="1/2"))),
        ("general(2,1;-1:-1/2,1:1/2)", GeneralSampler(GeneralParams(2, 1, {-1: "-1/2", 1: "1/2"}))),
        ("bernoulli-pyramid:1/3", LimitSampler(LimitFamily("bernoulli-pyramid", "1/3"))),
        ("single-record:1/4", LimitSampler(LimitFamily("single-record", "1/4"))),
        ("theta-zero:2", LimitSampler(LimitFamily("theta-zero", 2))),
        ("zeta-zero:3", LimitSampler(LimitFamily("zeta-zero", 3))),
        ("pyramid-riffle:1/3", PyramidRiffleSampler(Fraction(1, 3))),
        ("from-shape(2,3)", ShapeSampler(TwoParam(2, 3), SAMPLER_MAX_N - 1)),
        ("from-shape-fixed", FixedShapeSampler(DEEP_SHAPE)),
        ("integer-window(2,2)", WindowSampler(2, 2)),
        ("integer-window(3,1)", WindowSampler(3, 1)),
        ("conditioned(1,[2],3)", ConditionedSampler(CenteredComposition.parse("1,^1,1"))),
    ]


class SamplersSuite(Suite):

    name = "samplers"
    default_max_n = SAMPLER_N
    default_trials = 100000
    statistical = True

    def emit(self, value):
        if self.tracer is not None:
            self.tracer.emit_event(PYCOPERM_OPS_EVENT, value)

    def compare(self, report, label, sampler, table, seed):
        n = table.n
        self.emit(PYCOPERM_OPS_SAMPLING)
        samples = list(sampler.draws(n, self.trials, get_rng(seed), self.progress))
        self.emit(PYCOPERM_OPS_COMPARE)
        divergence = compare_exact_empirical(table, samples)
        self.emit(0)
        report.add(f"{label}/divergence", divergence)
        return divergence

    def checks(self, report):
        samplers = suite_samplers()
        seeds = spawn_seeds(self.seed, len(samplers) + 8)
        n = min(self.max_n, SAMPLER_MAX_N)
        for (label, sampler), seed in zip(samplers, seeds):
            table = sampler.exact_table(sampler.profile.n if isinstance(sampler, ConditionedSampler) else n,
                                        self.jobs, self.comm)
            divergence = self.compare(report, label, sampler, table, seed)
            report.check(f"{label} matches its exact table", divergence.passed(table.n),
                         f"p={divergence.p_value:.3g}, tv={divergence.tv:.4f}")
        extra = iter(seeds[len(samplers):])

        table = pushforward_table(n, TwoParamLaw(TwoParam(2, 3)), self.jobs, self.comm)
        control = self.compare(report, "negative-control", TwoParamSampler(TwoParam(3, 2)), table, next(extra))
        report.check("negative control: two-param(3,2) is rejected against two-param(2,3)",
                     not control.passed(n) and control.p_value < SIGNIFICANCE)

        self.conditioned_class(report, next(extra))
        self.phi_frequency(report, next(extra))
        self.pyramid_forms(report, next(extra))
        self.stream_law(report, next(extra), next(extra))

    def conditioned_class(self, report, seed):
        composition = CenteredComposition.parse(CONDITIONED_CLASS)
        sampler = ConditionedSampler(composition)
        self.emit(PYCOPERM_OPS_SAMPLING)
        samples = list(sampler.draws(composition.degree, self.trials, get_rng(seed), self.progress))
        self.emit(0)
        profile = composition.profile()
        report.check(f"conditioned {CONDITIONED_CLASS}: every draw has the requested profile",
                     all(extract_records(p).same_values(profile) for p in samples))
        divergence = compare_uniform(samples, d_count(composition))
        report.add("conditioned_class/size", d_count(composition))
        report.add("conditioned_class/divergence", divergence)
        report.check(f"conditioned {CONDITIONED_CLASS} is uniform on its {d_count(composition)} members",
                     divergence.p_value > SIGNIFICANCE)

    def phi_frequency(self, report, seed):
        composition = CenteredComposition.parse(PHI_COMPOSITION)
        target = Permutation([1, 3, 2])
        expected = permutation_weight_from_shape(composition, PHI_SHAPE)
        sampler = FixedShapeSampler(PHI_SHAPE)
        hits = sum(p == target for p in sampler.draws(composition.degree, self.trials, get_rng(seed), self.progress))
        frequency = hits / self.trials
        error = math.sqrt(expected * (1 - expected) / self.trials)
        report.add("phi/expected", expected)
        report.add("phi/frequency", frequency)
        report.check(f"fixed shape frequency of (1,3,2) within {PHI_TOLERANCE:.0%} of {expected:.2f}",
                     abs(frequency - expected) <= PHI_TOLERANCE * expected
                     and abs(frequency - expected) <= Z_THRESHOLD * error)

    def pyramid_forms(self, report, seed):
        n = min(self.max_n, SAMPLER_MAX_N)
        for p in (Fraction(0), Fraction(1, 2), Fraction(1)):
            table = pushforward_table(n, PyramidLaw(p), self.jobs, self.comm)
            report.check(f"pyramid p={p} table is p^l (1-p)^u",
                         all(table[q] == p ** extract_records(q).lower_count *
                             (1 - p) ** extract_records(q).upper_count for q in Permutation.all(n)))
        rng = get_rng(seed)
        low = PyramidRiffleSampler(Fraction(1))
        high = PyramidRiffleSampler(Fraction(0))
        report.check("pyramid p=1 always draws (n, ..., 1) and p=0 always (1, ..., n)",
                     all(low.draw(n, rng) == Permutation(range(n, 0, -1)) and
                         high.draw(n, rng) == Permutation.identity(n) for _ in range(100)))

    def stream_law(self, report, seed, prefix_seed):
        """Streams of one seed per trial match the two-param table, and their prefixes are coherent."""
        n = min(self.max_n, SAMPLER_MAX_N)
        params = TwoParam(2, 3)
        law = TwoParamLaw(params)
        trials = max(1, self.trials // STREAM_TRIALS_RATIO)
        children = seed.spawn(trials)
        self.emit(PYCOPERM_OPS_SAMPLING)
        samples = [stream(law, child, n).permutation() for child in children]
        self.emit(0)
        table = pushforward_table(n, law, self.jobs, self.comm)
        divergence = compare_exact_empirical(table, samples)
        report.add("stream/divergence", divergence)
        report.check("stream permutations match the two-param table", divergence.passed(n))
        short, long = stream(law, prefix_seed, 5).permutation(), stream(law, prefix_seed, 9).permutation()
        report.check("stream prefix of size 5 is the restriction of the size 9 stream", restrict(long, 5) == short)
