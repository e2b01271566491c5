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

import csv
import io
import json
import os
import tempfile
import unittest
from contextlib import redirect_stderr, redirect_stdout

from pycoperm.config import CommandConfig
from pycoperm.pycoperm_run import main, run, EXIT_OK, EXIT_USAGE
from pycoperm.records import Permutation, extract_records


def _run(*argv):
    """Runs the command line, returns (status, stdout, stderr)."""
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        status = main(list(argv))
    return status, out.getvalue(), err.getvalue()


class CommandLineTestCase(unittest.TestCase):
    """
    Tests the pycoperm_run commands end to end on small inputs.
    """

    def test_sample_of_size_one(self):
        status, out, _ = _run("sample", "--theta", "1", "--zeta", "1", "--n", "1", "--format", "json")
        self.assertEqual(status, EXIT_OK)
        self.assertEqual(json.loads(out), [{"n": 1, "perm": [1], "l": 0, "u": 0, "record_values": [1],
                                            "record_times": [1]}])
        status, out, _ = _run("sample", "--model", "two-param", "--theta", "1", "--zeta", "1", "--n", "1")
        self.assertEqual(status, EXIT_OK)
        self.assertEqual(out, "1\n")

    def test_sample_is_reproducible(self):
        argv = ("sample", "--theta", "2", "--zeta", "1/2", "--n", "12", "--trials", "3", "--seed", "9",
                "--format", "csv")
        first = _run(*argv)
        second = _run(*argv)
        self.assertEqual(first, second)
        rows = list(csv.DictReader(io.StringIO(first[1])))
        self.assertEqual(len(rows), 3)
        for row in rows:
            self.assertEqual(sorted(json.loads(row["perm"])), list(range(1, 13)))
            self.assertEqual(len(json.loads(row["record_values"])), int(row["l"]) + int(row["u"]) + 1)

    def test_sample_word_lines_and_records(self):
        argv = ("sample", "--model", "general", "--theta", "1", "--zeta", "2", "--alpha", "tail:1/2", "--n", "7",
                "--trials", "4", "--seed", "3")
        status, out, _ = _run(*argv)
        self.assertEqual(status, EXIT_OK)
        words = out.splitlines()
        self.assertEqual(len(words), 4)
        status, out, _ = _run(*argv, "--format", "json")
        records = json.loads(out)
        self.assertEqual([",".join(str(v) for v in record["perm"]) for record in records], words)
        for record in records:
            profile = extract_records(Permutation(record["perm"]))
            self.assertEqual(record["record_values"], list(profile.values))
            self.assertEqual(record["record_times"], profile.record_times)
            self.assertEqual((record["l"], record["u"]), (profile.lower_count, profile.upper_count))
        status, out, _ = _run(*argv, "--format", "table")
        self.assertIn("record_times", out)

    def test_exact_stirling(self):
        status, out, _ = _run("exact", "stirling", "--n", "3", "--format", "json")
        self.assertEqual(status, EXIT_OK)
        data = json.loads(out)
        self.assertEqual(data["n"], 3)
        counts = {(e["l"], e["u"]): e["count"] for e in data["entries"]}
        self.assertEqual(sum(counts.values()), 6)
        self.assertEqual(counts[(1, 1)], 2)

    def test_exact_d(self):
        status, out, _ = _run("exact", "d", "--composition", "3,1,^1,3,2", "--format", "json")
        self.assertEqual(status, EXIT_OK)
        self.assertEqual(json.loads(out), [{"composition": "3,1,^1,3,2", "d": 3024}])
        status, out, _ = _run("exact", "d", "--composition", "3,1,^1,3,2")
        self.assertIn("3024", out)

    def test_exact_table_and_w(self):
        status, out, _ = _run("exact", "table", "--theta", "1", "--zeta", "1", "--n", "3", "--format", "json")
        self.assertEqual(status, EXIT_OK)
        self.assertEqual(len(json.loads(out)["entries"]), 6)
        status, out, _ = _run("exact", "w", "--theta", "2", "--zeta", "3", "--n", "4", "--format", "json")
        self.assertEqual(status, EXIT_OK)
        self.assertTrue(json.loads(out)["dual_recursion"])

    def test_verify_errata(self):
        status, out, _ = _run("verify", "--suite", "errata", "--max-n", "4", "--format", "json")
        self.assertEqual(status, EXIT_OK)
        self.assertEqual(json.loads(out)["verdict"], "pass")

    def test_mc_to_output_file(self):
        with tempfile.TemporaryDirectory() as directory:
            path = os.path.join(directory, "report.json")
            status, out, err = _run("mc", "--experiment", "poisson-times", "--n", "500", "--trials", "400",
                                    "--seed", "2", "--format", "json", "--output", path)
            self.assertEqual(status, EXIT_OK)
            self.assertEqual(out, "")
            self.assertIn(path, err)
            with open(path) as f:
                self.assertEqual(json.load(f)["experiment"], "poisson-times")

    def test_tracing_records_the_run(self):
        # The CSV is written at exit, so only the accumulated rows are checked
        path = os.path.join(tempfile.gettempdir(), "pycoperm_cli_trace.csv")
        config = CommandConfig(command="verify", suite="errata", max_n=4, format="json", tracing=True,
                               tracer_output=path)
        err = io.StringIO()
        with redirect_stdout(io.StringIO()), redirect_stderr(err):
            self.assertEqual(run(config), EXIT_OK)
        self.assertIn(">>> suite errata: user time=", err.getvalue())
        rows = {(type_name, name): calls for type_name, _, name, calls, _ in config.tracer.rows()}
        self.assertEqual(rows[("Run", "verify")], 1)
        self.assertEqual(rows[("Suites", "errata")], 1)
        self.assertEqual(rows[("Operations", "output")], 1)
        with self.assertRaises(ValueError):
            CommandConfig(command="sample", n=3, tracing=True)

    def test_usage_errors(self):
        status, out, err = _run("sample", "--n", "0")
        self.assertEqual(status, EXIT_USAGE)
        self.assertEqual(out, "")
        self.assertIn("ERROR", err)
        status, _, _ = _run("exact", "d")
        self.assertEqual(status, EXIT_USAGE)
        status, _, _ = _run("exact", "dext", "--composition", "^1,2", "--composition2", "1,^1,1")
        self.assertEqual(status, EXIT_USAGE)
        with redirect_stderr(io.StringIO()), self.assertRaises(SystemExit):
            main(["shuffle"])


if __name__ == '__main__':
    unittest.main()
