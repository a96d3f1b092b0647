# -*- coding: utf-8 -*-
"""
Reproducible Monte Carlo estimates over sample paths.

Path i is always generated from the stream (seed, i),
so an estimate depends only on the seed and the path
count, never on the number of worker threads or the
order in which paths complete.

"""


import multiprocessing.pool

import numpy

import levychaos.log
import levychaos.simulate

from levychaos.exception import LevyChaosError
from levychaos.exception import NumericError
from levychaos.exception import ParameterError


# =============================================================================
class McEstimate():  # pylint: disable=R0903
    """
    Sample mean and standard error of a (scalar or vector) functional.

    """

    # -------------------------------------------------------------------------
    def __init__(self, mean, se, count, seed):
        """
        Return a McEstimate instance.

        """
        self.mean  = mean
        self.se    = se
        self.count = int(count)
        self.seed  = seed

    # -------------------------------------------------------------------------
    def zscore(self, target = 0.0):
        """
        Return (mean - target) / se, with 0 where mean == target exactly.

        """
        diff = numpy.asarray(self.mean, dtype = float) - target
        se   = numpy.asarray(self.se, dtype = float)
        with numpy.errstate(divide = 'ignore', invalid = 'ignore'):
            zscore = numpy.where(diff == 0.0, 0.0, diff / se)
        return zscore if zscore.ndim else float(zscore)

    # -------------------------------------------------------------------------
    def within(self, target = 0.0, num_se = 4.0):
        """
        Return True iff every |mean - target| <= num_se * se.

        """
        diff = numpy.abs(numpy.asarray(self.mean, dtype = float) - target)
        return bool(numpy.all(diff <= num_se * numpy.asarray(self.se)))

    # -------------------------------------------------------------------------
    def to_dict(self):
        """
        Return the estimate as a JSON compatible dict.

        """
        return { 'mean': numpy.asarray(self.mean).tolist(),
                 'se':   numpy.asarray(self.se).tolist(),
                 'n':    self.count,
                 'seed': self.seed }


# -----------------------------------------------------------------------------
def estimate(values, seed):
    """
    Return the McEstimate of an array of per-path values (first axis).

    """
    values = numpy.asarray(values, dtype = float)
    count  = values.shape[0]
    if count < 2:
        raise ParameterError('At least two samples are required.')
    mean = values.mean(axis = 0)
    se   = values.std(axis = 0, ddof = 1) / numpy.sqrt(count)
    if values.ndim == 1:
        (mean, se) = (float(mean), float(se))
    return McEstimate(mean, se, count, seed)


# -----------------------------------------------------------------------------
def evaluate_paths(model,  # pylint: disable=R0913
                   functional,
                   num_paths,
                   seed,
                   horizon = 1.0,
                   dt      = None,
                   threads = 1):
    """
    Return the functional values of paths 0..num_paths-1, in path order.

    """
    if int(threads) < 1:
        raise ParameterError('threads must be >= 1.')

    def run_one(stream):
        path = levychaos.simulate.simulate_path(
                        model, horizon, dt = dt, seed = seed, stream = stream)
        try:
            return numpy.asarray(functional(path), dtype = float)
        except (LevyChaosError, ArithmeticError, ValueError) as err:
            msg = 'Functional failed on path {i} (seed {seed}): {err}'.format(
                                        i = stream, seed = seed, err = err)
            if isinstance(err, LevyChaosError):
                raise type(err)(msg) from err
            raise NumericError(msg) from err

    if int(threads) == 1:
        values = [run_one(stream) for stream in range(num_paths)]
    else:
        with multiprocessing.pool.ThreadPool(int(threads)) as pool:
            values = pool.map(run_one, range(num_paths))
    return numpy.array(values)


# -----------------------------------------------------------------------------
def mc_expectation(model,  # pylint: disable=R0913
                   functional,
                   num_paths,
                   seed,
                   horizon = 1.0,
                   dt      = None,
                   threads = 1):
    """
    Return the McEstimate of E[functional(path)] over num_paths paths.

    """
    if int(num_paths) < 2:
        raise ParameterError('At least two paths are required.')
    values = evaluate_paths(model, functional, int(num_paths), seed,
                            horizon = horizon, dt = dt, threads = threads)
    result = estimate(values, seed)
    levychaos.log.logger.debug('Monte Carlo over {n} paths (seed {seed})',
                               n = result.count, seed = seed)
    return result
