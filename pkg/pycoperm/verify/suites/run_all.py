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

"""Every registered suite, one after the other."""

import importlib

from .suite import Suite


class AllSuites(Suite):

    name = "all"
    statistical = True

    def __init__(self, config=None):
        super().__init__(config)
        self.config = config

    def checks(self, report):
        suites_module = importlib.import_module("pycoperm.verify.suites")
        for name in suites_module.SUITES:
            if name == self.name:
                continue
            suite = suites_module.suite_class(name)(self.config)
            report.extend(suite.run(), name)
