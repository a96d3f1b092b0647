# -*- coding: utf-8 -*-
"""
Package for sample paths of Levy models and pathwise functionals.

A SamplePath records everything needed to evaluate
power jump processes, Teugels martingales, the
orthogonalized martingales and their brackets:

    - exact jump times in (0, T] and jump vectors,
    - the Brownian increments on a uniform grid of
      step dt (the last step may be shorter), each
      attributed to the right end of its grid step,
    - the drift, covariance and truncation level.

With Sigma = 0 the grid is empty and every
evaluation is exact.

"""


import math

import numpy

import levychaos.log
import levychaos.multiindex
import levychaos.util.serialization

from levychaos.exception import ConfigurationError
from levychaos.exception import DimensionError
from levychaos.exception import DomainError
from levychaos.exception import ParameterError


TOL_GRID = 1e-12


# -----------------------------------------------------------------------------
def rng_for(seed, stream):
    """
    Return the counter-based generator of one (seed, stream) pair.

    """
    sequence = numpy.random.SeedSequence(int(seed), spawn_key = (int(stream),))
    return numpy.random.Generator(numpy.random.Philox(sequence))


# -----------------------------------------------------------------------------
def grid(horizon, dt):
    """
    Return the right end points of the Brownian grid on (0, horizon].

    """
    if not dt > 0:
        raise ParameterError('The grid step must be positive.')
    num_steps = max(1, math.ceil(horizon / dt - TOL_GRID))
    points    = numpy.arange(1, num_steps + 1, dtype = float) * dt
    points[-1] = horizon
    return points


# =============================================================================
class SamplePath():
    """
    One realized trajectory of a Levy model on [0, horizon].

    """

    # -------------------------------------------------------------------------
    def __init__(self,  # pylint: disable=R0913
                 horizon,
                 times,
                 jumps,
                 drift,
                 sigma,
                 dt          = None,
                 grid_times  = None,
                 increments  = None,
                 truncation  = None,
                 seed        = None,
                 stream      = 0,
                 fingerprint = None):
        """
        Return a SamplePath instance.

        """
        drift = numpy.array(drift, dtype = float).reshape(-1)
        n     = drift.size
        times = numpy.array(times, dtype = float).reshape(-1)
        jumps = numpy.array(jumps, dtype = float).reshape(times.size, n)
        if not horizon > 0:
            raise ParameterError('The horizon must be positive.')
        if numpy.any(numpy.diff(times) <= 0):
            raise DomainError('Jump times must be strictly increasing.')
        if times.size and (times[0] <= 0 or times[-1] > horizon):
            raise DomainError('Jump times must lie in (0, horizon].')
        if jumps.size and not numpy.all(numpy.any(jumps != 0.0, axis = 1)):
            raise DomainError('Jump vectors must be nonzero.')
        if grid_times is None:
            grid_times = numpy.zeros(0)
            increments = numpy.zeros((0, n))

        self.horizon     = float(horizon)
        self.times       = times
        self.jumps       = jumps
        self.drift       = drift
        self.sigma       = numpy.array(sigma, dtype = float).reshape(n, n)
        self.dt          = None if dt is None else float(dt)
        self.grid_times  = numpy.array(grid_times, dtype = float).reshape(-1)
        self.increments  = numpy.array(increments, dtype = float).reshape(
                                                    self.grid_times.size, n)
        self.truncation  = truncation
        self.seed        = seed
        self.stream      = int(stream)
        self.fingerprint = fingerprint
        for array in (self.times, self.jumps, self.drift, self.sigma,
                      self.grid_times, self.increments):
            array.setflags(write = False)

    # -------------------------------------------------------------------------
    @property
    def n(self):
        """
        Return the dimension.

        """
        return self.drift.size

    # -------------------------------------------------------------------------
    @property
    def num_jumps(self):
        """
        Return the number of jumps.

        """
        return self.times.size

    # -------------------------------------------------------------------------
    @property
    def on_grid(self):
        """
        Return True iff the path carries Brownian increments.

        """
        return self.grid_times.size > 0

    # -------------------------------------------------------------------------
    def check_time(self, t):
        """
        Raise DomainError unless 0 <= t <= horizon.

        """
        if not 0.0 <= t <= self.horizon:
            raise DomainError('Time {t} outside [0, {h}].'.format(
                                                    t = t, h = self.horizon))

    # -------------------------------------------------------------------------
    def jumps_upto(self, t):
        """
        Return the jump vectors with time <= t.

        """
        return self.jumps[:numpy.searchsorted(self.times, t, side = 'right')]

    # -------------------------------------------------------------------------
    def brownian(self, t):
        """
        Return B(t) as the sum of the grid increments attributed up to t.

        """
        count = numpy.searchsorted(self.grid_times, t, side = 'right')
        return self.increments[:count].sum(axis = 0)

    # -------------------------------------------------------------------------
    def summary(self):
        """
        Return a JSON compatible summary of the path.

        """
        return { 'horizon':     self.horizon,
                 'num_jumps':   self.num_jumps,
                 'num_steps':   int(self.grid_times.size),
                 'dt':          self.dt,
                 'truncation':  self.truncation,
                 'seed':        self.seed,
                 'stream':      self.stream,
                 'fingerprint': self.fingerprint }


# -----------------------------------------------------------------------------
def simulate_path(model, horizon, dt = None, seed = 0, stream = 0):
    """
    Return a SamplePath of the model on [0, horizon].

    The jump part is compound Poisson with the
    (truncated) measure. Brownian increments are drawn
    only when Sigma is nonzero, in which case a grid
    step dt is required.

    """
    if not horizon > 0:
        raise ParameterError('The horizon must be positive.')
    intensity = model.total_intensity()
    if not math.isfinite(intensity):
        raise ConfigurationError(
            'The jump measure has infinite intensity at truncation '
            '{eps}; set a positive truncation level.'.format(eps = model.eps))

    rng   = rng_for(seed, stream)
    count = int(rng.poisson(intensity * horizon)) if intensity > 0 else 0
    times = numpy.sort(rng.uniform(0.0, horizon, size = count))
    jumps = model.jumps.sample(rng, count, model.eps)

    (grid_times, increments) = (None, None)
    if model.has_brownian:
        if dt is None:
            raise ConfigurationError('A grid step is required when Sigma != 0.')
        grid_times = grid(horizon, dt)
        steps      = numpy.diff(grid_times, prepend = 0.0)
        (eigval, eigvec) = numpy.linalg.eigh(model.sigma)
        factor     = eigvec * numpy.sqrt(numpy.clip(eigval, 0.0, None))
        normals    = rng.standard_normal((grid_times.size, model.n))
        increments = (normals @ factor.T) * numpy.sqrt(steps)[:, None]

    return SamplePath(horizon     = horizon,
                      times       = times,
                      jumps       = jumps,
                      drift       = model.effective_drift,
                      sigma       = model.sigma,
                      dt          = dt if model.has_brownian else None,
                      grid_times  = grid_times,
                      increments  = increments,
                      truncation  = model.truncation,
                      seed        = seed,
                      stream      = stream,
                      fingerprint = model.fingerprint)


# -----------------------------------------------------------------------------
def _index(path, p):
    """
    Return p as a martingale label of the path dimension.

    """
    p = levychaos.multiindex.MultiIndex.label(p)
    if p.n != path.n:
        raise DimensionError('Index {p} does not match dimension {n}.'.format(
                                                        p = list(p), n = path.n))
    return p


# -----------------------------------------------------------------------------
def _check_table(path, table):
    """
    Raise ConfigurationError if path and table come from different models.

    """
    if (    path.fingerprint is not None
        and table.fingerprint not in (None, 'synthetic')
        and path.fingerprint != table.fingerprint):
        raise ConfigurationError(
            'Path fingerprint {fp} does not match table {ft}.'.format(
                                fp = path.fingerprint, ft = table.fingerprint))


# -----------------------------------------------------------------------------
def power_jump(path, p, t):
    """
    Return the jump sum X^p(t) of prod (dX_i)^p_i over jumps up to t.

    For |p| = 1 this is the jump part only; the
    full coordinate process is process_value.

    """
    p = _index(path, p)
    path.check_time(t)
    jumps = path.jumps_upto(t)
    if not jumps.size:
        return 0.0
    return float(numpy.prod(jumps ** numpy.asarray(p, dtype = float),
                            axis = 1).sum())


# -----------------------------------------------------------------------------
def process_value(path, t, i = None):
    """
    Return X(t) = a t + B(t) + sum of jumps, or its coordinate i.

    """
    path.check_time(t)
    value = path.drift * t + path.brownian(t) + path.jumps_upto(t).sum(axis = 0)
    if i is None:
        return value
    return float(value[i])


# -----------------------------------------------------------------------------
def bv_residual(path, t):
    """
    Return max_i |X_i(t) - a_i t - sum of jumps of X_i up to t|.

    Zero on paths without Brownian part.

    """
    value = process_value(path, t)
    rest  = value - path.drift * t - path.jumps_upto(t).sum(axis = 0)
    return float(numpy.max(numpy.abs(rest)))


# -----------------------------------------------------------------------------
def teugels(path, table, p, t):
    """
    Return the Teugels martingale Y^p(t) = X^p(t) - m_p t.

    """
    p = _index(path, p)
    _check_table(path, table)
    coordinate = p.unit_coordinate
    if coordinate is None:
        return power_jump(path, p, t) - table[p] * t
    return process_value(path, t, coordinate) - table[p] * t


# -----------------------------------------------------------------------------
def power_jumps(path, indices, t):
    """
    Return the jump sums X^p(t) of every listed index at once.

    """
    path.check_time(t)
    exps  = numpy.array(indices, dtype = float).reshape(len(indices), path.n)
    jumps = path.jumps_upto(t)
    if not jumps.size:
        return numpy.zeros(len(indices))
    return numpy.prod(jumps[:, None, :] ** exps[None, :, :], axis = 2).sum(
                                                                    axis = 0)


# -----------------------------------------------------------------------------
def teugels_vector(path, table, indices, t):
    """
    Return the Teugels martingales of the listed indices at t.

    """
    _check_table(path, table)
    indices = [_index(path, p) for p in indices]
    values  = power_jumps(path, indices, t)
    state   = process_value(path, t)
    for (pos, p) in enumerate(indices):
        coordinate = p.unit_coordinate
        if coordinate is not None:
            values[pos] = state[coordinate]
        values[pos] -= table[p] * t
    return values


# -----------------------------------------------------------------------------
def evaluate_basis(path, basis, table, t):
    """
    Return H(t) = C Y(t), one value per retained basis index.

    """
    basis.check_fingerprint(table.fingerprint)
    basis.check_fingerprint(path.fingerprint)
    _check_table(path, table)
    return basis.coefficients @ teugels_vector(path, table, basis.indices, t)


# -----------------------------------------------------------------------------
def bracket(path, table, p, q, t):
    """
    Return the quadratic covariation [Y^p, Y^q](t) along the path.

    The continuous part Sigma_ij t is present only
    when p = e_i and q = e_j.

    """
    p = _index(path, p)
    q = _index(path, q)
    _check_table(path, table)
    value = power_jump(path, p + q, t)
    (i, j) = (p.unit_coordinate, q.unit_coordinate)
    if i is not None and j is not None:
        value += float(path.sigma[i, j]) * t
    return value


# -----------------------------------------------------------------------------
def bracket_matrix(path, table, indices, t):
    """
    Return the matrix of brackets [Y^p, Y^q](t) over an index list.

    """
    _check_table(path, table)
    indices = [_index(path, p) for p in indices]
    size    = len(indices)
    pairs   = [(row, col) for row in range(size) for col in range(row, size)]
    sums    = power_jumps(path, [indices[row] + indices[col]
                                 for (row, col) in pairs], t)
    result  = numpy.zeros((size, size))
    for ((row, col), value) in zip(pairs, sums):
        (i, j) = (indices[row].unit_coordinate, indices[col].unit_coordinate)
        if i is not None and j is not None:
            value += float(path.sigma[i, j]) * t
        result[row, col] = value
        result[col, row] = value
    return result


# -----------------------------------------------------------------------------
def bracket_basis(path, basis, table, t):
    """
    Return the matrix of brackets [H^p, H^q](t) = C B(t) C^T.

    """
    basis.check_fingerprint(table.fingerprint)
    basis.check_fingerprint(path.fingerprint)
    coef = basis.coefficients
    return coef @ bracket_matrix(path, table, basis.indices, t) @ coef.T


# -----------------------------------------------------------------------------
def write_csv(path, filepath_jumps, filepath_grid = None):
    """
    Write the jump record and, if present, the Brownian grid as CSV.

    """
    header_jumps = ['t_jump'] + ['dx_{i}'.format(i = i + 1)
                                 for i in range(path.n)]
    rows_jumps   = [[float(time)] + [float(value) for value in jump]
                    for (time, jump) in zip(path.times, path.jumps)]
    levychaos.util.serialization.write_csv(
                                filepath_jumps, header_jumps, rows_jumps)
    levychaos.log.logger.debug('Wrote path {stream} to {fp}',
                               stream = path.stream, fp = filepath_jumps)
    if filepath_grid is None or not path.on_grid:
        return
    header_grid = ['t_grid'] + ['db_{i}'.format(i = i + 1)
                                for i in range(path.n)]
    rows_grid   = [[float(time)] + [float(value) for value in step]
                   for (time, step) in zip(path.grid_times, path.increments)]
    levychaos.util.serialization.write_csv(
                                filepath_grid, header_grid, rows_grid)
