"""
Fan-out of independent work chunks.

Under an MPI launch (``mpiexec -n N``, with :mod:`mpi4py` installed) chunks
are dealt round-robin to the ranks and gathered on every rank. Otherwise a
local process pool is used, sized by the ``COVERDEPTH_THREADS`` environment
variable. Results always come back in chunk order, and callers merge them
with exact integer arithmetic, so the outcome does not depend on scheduling.
"""
from .log import debug
from concurrent.futures import ProcessPoolExecutor
import os


__all__ = ['num_workers', 'map_chunks']


def num_workers():
    """
    Number of local worker processes, read from ``COVERDEPTH_THREADS``.
    """
    value = os.environ.get('COVERDEPTH_THREADS')
    if value is None or value.strip() == '':
        return 1
    try:
        workers = int(value)
    except ValueError:
        raise ValueError(f"COVERDEPTH_THREADS must be a positive integer, not '{value}'")
    if workers < 1:
        raise ValueError(f"COVERDEPTH_THREADS must be a positive integer, not {workers}")
    return workers


def _mpi_comm():
    try:
        from mpi4py import MPI
    except ImportError:
        return None
    comm = MPI.COMM_WORLD
    return comm if comm.size > 1 else None


def map_chunks(func, chunks):
    """
    Evaluate ``func`` on every chunk payload.

    :arg func: a picklable module-level function
    :arg chunks: list of picklable payloads
    :return: list of results, in the order of ``chunks``
    """
    chunks = list(chunks)
    comm = _mpi_comm()
    if comm is not None:
        mine = {i: func(chunk) for i, chunk in enumerate(chunks) if i % comm.size == comm.rank}
        gathered = comm.allgather(mine)
        results = {}
        for part in gathered:
            results.update(part)
        debug(f"map_chunks: {len(chunks)} chunks over {comm.size} MPI ranks")
        return [results[i] for i in range(len(chunks))]
    workers = min(num_workers(), len(chunks))
    if workers > 1:
        debug(f"map_chunks: {len(chunks)} chunks over {workers} processes")
        with ProcessPoolExecutor(max_workers=workers) as executor:
            return list(executor.map(func, chunks))
    return [func(chunk) for chunk in chunks]
