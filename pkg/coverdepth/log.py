"""
Loggers for coverdepth.

Only the root MPI rank emits records, so that runs launched under
``mpiexec`` do not repeat every message once per process.
"""
import logging
from logging import DEBUG, INFO, WARNING, ERROR, CRITICAL  # noqa


__all__ = ['logger', 'output_logger', 'debug', 'info', 'warning', 'error', 'critical', 'pyrint',
           'set_log_level', 'comm_rank', 'DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL']


def comm_rank():
    """
    Rank of this process in ``MPI.COMM_WORLD``, or zero if
    :mod:`mpi4py` is not installed.
    """
    try:
        from mpi4py import MPI
    except ImportError:
        return 0
    return MPI.COMM_WORLD.rank


def get_new_logger(name, fmt='%(levelname)s %(message)s'):
    logger = logging.getLogger(name)
    for handler in list(logger.handlers):
        logger.removeHandler(handler)
    handler = logging.StreamHandler()
    handler.setFormatter(logging.Formatter(fmt))
    if comm_rank() != 0:
        handler = logging.NullHandler()
    logger.addHandler(handler)
    logger.propagate = False
    return logger


logger = get_new_logger('coverdepth')
logger.setLevel(logging.WARNING)
log = logger.log
debug = logger.debug
info = logger.info
warning = logger.warning
error = logger.error
critical = logger.critical

output_logger = get_new_logger('coverdepth_output', fmt='%(message)s')
output_logger.setLevel(logging.INFO)
pyrint = output_logger.info


def set_log_level(level):
    logger.setLevel(level)
