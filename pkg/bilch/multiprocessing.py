"""Functions to ease parallel processing of pairwise computations"""

# built-in modules
import functools

# installed modules
import multiprocess

# project modules
from .meta import error_wrapper_pool


def pool_map_more_than_one_arg(method):
    """Use this decorator when using pool with a function that
    accepts more than one argument. Each job is a tuple of positional
    arguments."""
    @functools.wraps(method)
    def wrapper(args):
        return method(*args)
    return wrapper


def pool_map(worker, jobs, workers=1):
    """Apply worker to every job and return the results in job order.

    Args:
        worker (callable): called as worker(*job).
        jobs (iterable): positional argument tuples.
        workers (int): pool size; 1 or less runs in-process.

    Returns:
        results (list): one result per job, same order as jobs.
    """
    jobs = list(jobs)

    if workers <= 1 or len(jobs) <= 1:
        return list(map(pool_map_more_than_one_arg(worker), jobs))

    worker = pool_map_more_than_one_arg(error_wrapper_pool(worker))

    pool = multiprocess.Pool(min(workers, len(jobs)))
    try:
        resp = list(pool.imap(worker, jobs))
    finally:
        pool.close()
        pool.join()

    return resp
