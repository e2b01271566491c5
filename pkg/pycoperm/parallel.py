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
Chunked parallel execution

Work is split into independent chunks. Sequential runs map them in place,
'--jobs J' uses a pool of J local processes and an MPI communicator spreads
them round robin over the ranks. The results always come back as a list in
chunk order on every rank.
"""

from concurrent.futures import ProcessPoolExecutor


def map_chunks(function, chunks, jobs=1, comm=None):
    """
    Applies function to every chunk and returns the results in chunk order.

    Parameters
    ----------
    function : callable
        A module level function (it must be picklable).
    chunks : list
    jobs : int
        Number of local worker processes (1 runs sequentially).
    comm : mpi4py communicator, optional
        When given, rank r processes chunks r, r + size, ... and the partial
        results are gathered and broadcast.
    """
    chunks = list(chunks)
    if comm is not None and comm.Get_size() > 1:
        rank, size = comm.Get_rank(), comm.Get_size()
        local = [(index, function(chunk)) for index, chunk in enumerate(chunks) if index % size == rank]
        gathered = comm.allgather(local)
        results = [None] * len(chunks)
        for part in gathered:
            for index, result in part:
                results[index] = result
        return results
    if jobs is None or jobs <= 1 or len(chunks) <= 1:
        return [function(chunk) for chunk in chunks]
    with ProcessPoolExecutor(max_workers=jobs) as executor:
        return list(executor.map(function, chunks))
