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

from setuptools import setup, find_packages

from settings import Settings

s = Settings()

setup(
    name=s.name,
    version=s.version,
    description=s.description,
    long_description=s.long_description,
    long_description_content_type="text/x-rst",
    author=s.author,
    license=s.license,
    classifiers=s.classifiers,
    keywords=s.keywords,
    python_requires=">=3.7",
    packages=find_packages(include=["pycoperm", "pycoperm.*"]),
    install_requires=s.install_requires,
    extras_require=s.extras_require,
    entry_points={"console_scripts": ["pycoperm_run=pycoperm.pycoperm_run:main"]},
)
