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

import codecs  # To use a consistent encoding when opening version.py
import os


def read(file_name):
    """Reads a file and returns its content"""
    file_name = os.path.join(os.path.dirname(__file__), file_name)
    with codecs.open(file_name, encoding='utf8') as f:
        return f.read()


def get_version():
    """Gets version from 'pycoperm/version.py'."""
    version_dict = {}
    with codecs.open('pycoperm/version.py') as fp:
        exec(fp.read(), version_dict)
    return version_dict['__version__']


class Settings:
    """
    PyCoPerm package settings
    """
    name = 'pycoperm'
    version = get_version()
    description = 'Python Coherent Permutations: records of coherent random permutations'
    long_description = '\n\n'.join([read('README.rst'), read('CREDITS.rst'), read('LICENSE.rst'),
                                    read('CHANGELOG.rst')])
    author = 'PyCoPerm developers'
    license = 'GPLV3+'
    classifiers = [
        'Development Status :: 3 - Alpha',
        'Intended Audience :: Science/Research',
        'Topic :: Scientific/Engineering',
        'Topic :: Scientific/Engineering :: Mathematics',
        'License :: OSI Approved :: GNU General Public License v3 or later (GPLv3+)',
        'Programming Language :: Python :: 3',
    ]
    keywords = ['Random permutations', 'Records', 'Ewens sampling', 'Monte Carlo verification', 'Python']
    install_requires = ['numpy>=1.19.4', 'scipy>=1.6.0', 'prettytable>=2.1.0', 'rich>=9.9.0', 'tqdm>=4.55.0']
    extras_require = {'mpi': ['mpi4py>=3.0.3']}
