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
pycoperm_run: command line front end

    pycoperm_run sample --model two-param --theta 2 --zeta 3 --n 8 --seed 1
    pycoperm_run exact table --theta 1/2 --zeta 2 --n 4 --format json
    pycoperm_run exact d --composition "3,1,^1,3,2"
    pycoperm_run verify --suite errata
    pycoperm_run mc --experiment gaussian-counts --n 100000 --trials 2000

Artifacts go to stdout (or to --output), status lines to stderr. The exit
status is 0 on success, 1 when a verification fails and 2 on usage errors.
"""

import cProfile
import csv
import io
import json
import pstats
import sys
from io import StringIO

from prettytable import PrettyTable

from .config import CommandConfig
from .errors import ArgumentError
from .exact import (record_stirling_table, pe_law, d_count, d_ext, martin_ratio, phi_boundary,
                    permutation_weight_from_shape, followers, composition_count, composition_count_formula,
                    extension_count, record_chain_step, w_table, check_dual, TwoParam)
from .parser import parser
from .records import extract_records
from .samplers import get_sampler, get_rng
from .tracers import (PYCOPERM_RUN_EVENT, PYCOPERM_RUN_SAMPLE, PYCOPERM_RUN_EXACT, PYCOPERM_RUN_VERIFY,
                      PYCOPERM_RUN_MC, PYCOPERM_OPS_EVENT, PYCOPERM_OPS_OUTPUT)
from .utils import log, error, format_rational
from .verify import get_suite, get_experiment, SUITES, EXPERIMENTS, FAIL
from .verify.reports import plain

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2


class Artifact:
    """
    Rows emitted by a command, rendered as plain text, a table, JSON or CSV.

    data, when given, is the JSON document; otherwise the rows are written as
    a list of objects keyed by the headers. lines, when given, is the plain
    text output; otherwise every row is one tab separated line.
    """

    def __init__(self, headers, rows, data=None, title=None, lines=None):
        self.headers = list(headers)
        self.rows = [[plain(value) for value in row] for row in rows]
        self.data = data
        self.title = title
        self.lines = lines

    def to_text(self):
        lines = self.lines
        if lines is None:
            lines = ["\t".join(json.dumps(value) if isinstance(value, (dict, list)) else str(value) for value in row)
                     for row in self.rows]
        return "".join(f"{line}\n" for line in lines)

    def to_table(self):
        table = PrettyTable(self.headers)
        table.align = "l"
        for row in self.rows:
            table.add_row([json.dumps(value) if isinstance(value, (dict, list)) else value for value in row])
        text = table.get_string()
        return f"{self.title}\n{text}\n" if self.title else f"{text}\n"

    def to_json(self):
        data = self.data if self.data is not None else [dict(zip(self.headers, row)) for row in self.rows]
        return json.dumps(plain(data), indent=2) + "\n"

    def to_csv(self):
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(self.headers)
        for row in self.rows:
            writer.writerow([json.dumps(value) if isinstance(value, (dict, list)) else value for value in row])
        return out.getvalue()

    def render(self, output_format):
        return getattr(self, f"to_{output_format}")()


def show_options(config):
    for name, value in sorted(config.options().items()):
        sys.stderr.write(f'  {name:31s}: {str(value):s}\n')


def banner(config, text):
    if config.verbose:
        log(f"**** {text}")


# Subcommands

SAMPLE_FIELDS = ("n", "perm", "l", "u", "record_values", "record_times")


def sample_record(p):
    """JSON record of one sampled permutation with its record profile."""
    profile = extract_records(p)
    return {"n": p.n, "perm": list(p.values), "l": profile.lower_count, "u": profile.upper_count,
            "record_values": list(profile.values), "record_times": profile.record_times}


def run_sample(config):
    sampler = get_sampler(config)
    n = config.n if config.n is not None else sampler.profile.n
    banner(config, f"Sampling {config.model} model...")
    if config.trials is None:
        permutations = [sampler.sample(n, config.seed)]
    else:
        permutations = list(sampler.draws(n, config.trials, get_rng(config.seed), config.progress))
    records = [sample_record(p) for p in permutations]
    return Artifact(SAMPLE_FIELDS, [[record[name] for name in SAMPLE_FIELDS] for record in records], records,
                    lines=[str(p) for p in permutations]), EXIT_OK


def _two_param(config):
    params = config.params()
    if not isinstance(params, TwoParam):
        raise ArgumentError(f"'exact {config.quantity}' needs the two-parameter law (no --alpha).")
    return params


def run_exact(config):
    quantity = config.quantity
    banner(config, f"Computing {quantity}...")
    if quantity == "table":
        sampler = get_sampler(config)
        n = sampler.profile.n if config.model == "conditioned" and config.n is None else config.required("n")[0]
        table = sampler.exact_table(n, config.jobs, config.comm)
        if table is None:
            raise ArgumentError(f"Model '{config.model}' has no exact table.")
        return Artifact(["perm", "p"], [[str(p), q] for p, q in table.items()], table.to_dict(),
                        f"{config.model} n={n}"), EXIT_OK
    if quantity == "stirling":
        n, = config.required("n")
        rows = [[l, u, count] for (l, u), count in sorted(record_stirling_table(n).items())]
        return Artifact(["l", "u", "count"], rows, {"n": n, "entries": [
            {"l": l, "u": u, "count": count} for l, u, count in rows]}), EXIT_OK
    if quantity == "pe":
        n, = config.required("n")
        law = pe_law(n, _two_param(config))
        rows = [[r, q] for r, q in law.items() if config.r is None or r == config.r]
        return Artifact(["r", "p"], rows), EXIT_OK
    if quantity == "d":
        composition = config.composition()
        return Artifact(["composition", "d"], [[str(composition), d_count(composition)]]), EXIT_OK
    if quantity in ("dext", "ratio"):
        small, big = config.composition(), config.composition("composition2")
        value = d_ext(small, big) if quantity == "dext" else martin_ratio(small, big)
        return Artifact(["composition", "composition2", quantity], [[str(small), str(big), value]]), EXIT_OK
    if quantity == "phi":
        composition, shape = config.composition(), config.shape()
        return Artifact(["composition", "phi", "permutation_weight"],
                        [[str(composition), phi_boundary(composition, shape),
                          permutation_weight_from_shape(composition, shape)]]), EXIT_OK
    if quantity == "followers":
        composition = config.composition()
        return Artifact(["follower"], [[str(c)] for c in followers(composition)]), EXIT_OK
    if quantity == "count-compositions":
        n, = config.required("n")
        formula = format_rational(composition_count_formula(n)) if n >= 2 else None
        return Artifact(["n", "count", "formula"], [[n, composition_count(n), formula]]), EXIT_OK
    if quantity == "extension-count":
        values = config.required("n", "l", "u", "n2", "l2", "u2")
        return Artifact(["n", "l", "u", "n2", "l2", "u2", "count"], [values + [extension_count(*values)]]), EXIT_OK
    if quantity == "chain":
        n, r = config.required("n", "r")
        step = record_chain_step(r, n, _two_param(config), config.side)
        return Artifact(["value", "p"], [[v, q] for v, q in sorted(step.items())]), EXIT_OK
    if quantity == "w":
        n, = config.required("n")
        table = w_table(config.params(), n)
        rows = [[n_, l, u, table.weight[(n_, l, u)], table.mass[(n_, l, u)]] for n_, l, u in table.keys()]
        data = {**table.to_dict(), "dual_recursion": check_dual(table)}
        return Artifact(["n", "l", "u", "weight", "mass"], rows, data,
                        f"dual recursion holds: {check_dual(table)}"), EXIT_OK
    raise ArgumentError(f"Quantity '{quantity}' not recognized.")


def report_artifact(report):
    """Checks, statistics and verdict of a Report."""
    rows = [[check["name"], "pass" if check["passed"] else "FAIL", check["detail"] or ""]
            for check in report.checks]
    rows += [[name, "stat", value] for name, value in report.statistics.items()]
    title = f"{report.experiment}: {report.verdict} ({len(report.checks) - len(report.failures)}/" \
            f"{len(report.checks)} checks passed)"
    return Artifact(["name", "result", "detail"], rows, report.to_dict(), title)


def _status(report):
    if report.verdict == FAIL:
        for check in report.failures:
            error(f"{check['name']}: {check['detail'] or 'failed'}")
        return EXIT_FAILED
    return EXIT_OK


def run_verify(config):
    suite = get_suite(config)
    banner(config, f"Running the {suite.name} suite...")
    report = suite.run()
    return report_artifact(report), _status(report)


def run_mc(config):
    experiment = get_experiment(config)
    banner(config, f"Running the {experiment.name} experiment (n={experiment.n}, trials={experiment.trials})...")
    report = experiment.run()
    return report_artifact(report), _status(report)


_commands = {
    "sample": (run_sample, PYCOPERM_RUN_SAMPLE),
    "exact": (run_exact, PYCOPERM_RUN_EXACT),
    "verify": (run_verify, PYCOPERM_RUN_VERIFY),
    "mc": (run_mc, PYCOPERM_RUN_MC),
}


def run(config):
    """Runs the configured command, writes its artifact and returns the exit status."""
    tracer = config.tracer
    tracer.define_event_types(SUITES, EXPERIMENTS)
    command, event = _commands[config.command]
    tracer.emit_event(PYCOPERM_RUN_EVENT, event)
    artifact, status = command(config)
    tracer.emit_event(PYCOPERM_RUN_EVENT, 0)
    rank = config.comm.Get_rank() if config.comm is not None else 0
    if rank == 0:
        tracer.emit_event(PYCOPERM_OPS_EVENT, PYCOPERM_OPS_OUTPUT)
        text = artifact.render(config.format)
        if config.output:
            with open(config.output, "w") as f:
                f.write(text)
            log(f"Output written to '{config.output}'")
        else:
            sys.stdout.write(text)
        tracer.emit_event(PYCOPERM_OPS_EVENT, 0)
    return status


def main(argv=None):
    # Parse options
    args = parser.parse_args(argv)
    comm = None
    if args.parallel == "data":
        from mpi4py import MPI
        comm = MPI.COMM_WORLD
    try:
        config = CommandConfig(comm=comm, **vars(args))
    except ValueError as e:
        error(str(e))
        return EXIT_USAGE
    rank = comm.Get_rank() if comm is not None else 0
    if config.show_options and rank == 0:
        sys.stderr.write("**** Parameters:\n")
        show_options(config)
    if config.profile_run:
        pr = cProfile.Profile()
        pr.enable()
    try:
        status = run(config)
    except ValueError as e:
        error(str(e))
        status = EXIT_USAGE
    if config.profile_run:
        # noinspection PyUnboundLocalVariable
        pr.disable()
        s = StringIO()
        ps = pstats.Stats(pr, stream=s).sort_stats("time")
        ps.print_stats()
        if rank == 0:
            sys.stderr.write(s.getvalue())
    return status


if __name__ == "__main__":
    sys.exit(main())
