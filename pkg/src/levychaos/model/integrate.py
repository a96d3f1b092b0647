# -*- coding: utf-8 -*-
"""
Module of adaptive quadrature helpers with error checking.

All quadrature in levychaos goes through this
module. Requests are made at a relative tolerance
of 1e-9 with an absolute floor of 1e-14, and a
result whose error estimate is too large to be
trusted raises NumericError instead of being
returned quietly.

"""


import math
import warnings

import scipy.integrate

import levychaos.log

from levychaos.exception import NumericError


EPSREL     = 1e-9
EPSABS     = 1e-14
LIMIT      = 200
REL_ACCEPT = 1e-6
ABS_ACCEPT = 1e-10


# -----------------------------------------------------------------------------
def quad(fcn, lower, upper, args = ()):
    """
    Return (value, abserr) of a one dimensional integral.

    """
    with warnings.catch_warnings():
        warnings.simplefilter('ignore', scipy.integrate.IntegrationWarning)
        (value, abserr) = scipy.integrate.quad(fcn, lower, upper,
                                               args   = args,
                                               epsrel = EPSREL,
                                               epsabs = EPSABS,
                                               limit  = LIMIT)
    _check(value, abserr, (lower, upper))
    return (value, abserr)


# -----------------------------------------------------------------------------
def nquad(fcn, ranges):
    """
    Return (value, abserr) of an integral over a box.

    Ranges are listed innermost first, matching
    the argument order of fcn.

    """
    if len(ranges) == 1:
        return quad(fcn, *ranges[0])
    opts = [{ 'epsrel': EPSREL,
              'epsabs': EPSABS,
              'limit':  LIMIT }] * len(ranges)
    with warnings.catch_warnings():
        warnings.simplefilter('ignore', scipy.integrate.IntegrationWarning)
        (value, abserr) = scipy.integrate.nquad(fcn, ranges, opts = opts)
    _check(value, abserr, ranges)
    return (value, abserr)


# -----------------------------------------------------------------------------
def _check(value, abserr, where):
    """
    Raise NumericError unless the quadrature result can be trusted.

    """
    if not (math.isfinite(value) and math.isfinite(abserr)):
        raise NumericError(
            'Quadrature did not converge over {where}.'.format(where = where),
            residual = abserr)
    if abserr > max(REL_ACCEPT * abs(value), ABS_ACCEPT):
        raise NumericError(
            'Quadrature error estimate {err:.3g} too large for value '
            '{val:.6g} over {where}.'.format(err   = abserr,
                                             val   = value,
                                             where = where),
            residual = abserr)
    levychaos.log.logger.trace('quad {where}: {val} +- {err}',
                               where = where, val = value, err = abserr)
