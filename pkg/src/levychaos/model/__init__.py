# -*- coding: utf-8 -*-
"""
Package for multidimensional Levy process models.

A LevyModel holds the triplet (a, Sigma, nu):

    a      - the drift of the bounded variation
             decomposition X(t) = a t + B(t) + sum of jumps,
    Sigma  - the covariance of the Brownian part B,
    nu     - a JumpMeasure (see levychaos.model.jumps).

Models are immutable once constructed. The jump
truncation level eps is part of the model: density
variants are always analysed and simulated through
the restriction of nu to the region where every
|x_i| >= eps. With compensate_truncation set, the
mean of the removed small jumps is added to the
drift, so that first moments match the untruncated
measure.

"""


import copy
import math

import numpy

import levychaos.cfg.validate
import levychaos.log
import levychaos.model.copula
import levychaos.model.jumps
import levychaos.util.serialization

from levychaos.exception import CapabilityError
from levychaos.exception import ConfigurationError
from levychaos.exception import DimensionError
from levychaos.exception import DomainError
from levychaos.exception import ParameterError


TOL_PSD = 1e-12


# =============================================================================
class LevyModel():
    """
    A multidimensional Levy process given by its triplet.

    """

    # -------------------------------------------------------------------------
    def __init__(self, drift, sigma, jumps,  # pylint: disable=R0913
                 truncation            = None,
                 compensate_truncation = False):
        """
        Return a LevyModel, checking dimensions and that Sigma is PSD.

        """
        drift = numpy.array(drift, dtype = float).reshape(-1)
        num_dim = drift.size
        if num_dim < 1:
            raise DimensionError('A model needs dimension n >= 1.')
        sigma = numpy.array(sigma, dtype = float)
        if sigma.shape != (num_dim, num_dim):
            raise DimensionError('Sigma must be a {n}x{n} matrix.'.format(
                                                                n = num_dim))
        if not numpy.array_equal(sigma, sigma.T):
            raise ParameterError('Sigma must be symmetric.')
        eigenvalues = numpy.linalg.eigvalsh(sigma)
        scale       = float(numpy.max(numpy.abs(eigenvalues)))
        if eigenvalues.min() < -TOL_PSD * scale:
            raise ParameterError(
                'Sigma is not positive semidefinite (min eigenvalue '
                '{ev:.3g}).'.format(ev = eigenvalues.min()))
        if jumps.n != num_dim:
            raise DimensionError('Jump measure dimension {nj} != {n}.'.format(
                                                    nj = jumps.n, n = num_dim))
        if truncation is not None and not truncation > 0:
            raise ParameterError('The truncation level must be positive.')

        self.drift                 = drift
        self.sigma                 = sigma
        self.jumps                 = jumps
        self.truncation            = (None if truncation is None
                                      else float(truncation))
        self.compensate_truncation = bool(compensate_truncation)
        self._effective_drift      = None
        self.drift.setflags(write = False)
        self.sigma.setflags(write = False)

    # -------------------------------------------------------------------------
    @property
    def n(self):
        """
        Return the dimension.

        """
        return self.drift.size

    # -------------------------------------------------------------------------
    @property
    def eps(self):
        """
        Return the truncation level, 0.0 if the model is untruncated.

        """
        return self.truncation or 0.0

    # -------------------------------------------------------------------------
    @property
    def effective_drift(self):
        """
        Return the drift used by moments and simulation.

        Equal to the drift unless compensate_truncation
        is set, in which case the mean of the jumps
        removed by truncation is added.

        """
        if not (self.compensate_truncation and self.eps > 0.0):
            return self.drift
        if self._effective_drift is None:
            shift = self.jumps.small_jump_mean(self.eps)
            levychaos.log.logger.debug('Small jump compensation {shift}',
                                       shift = shift.tolist())
            self._effective_drift = self.drift + shift
            self._effective_drift.setflags(write = False)
        return self._effective_drift

    # -------------------------------------------------------------------------
    @property
    def has_brownian(self):
        """
        Return True iff Sigma is nonzero.

        """
        return bool(numpy.any(self.sigma != 0.0))

    # -------------------------------------------------------------------------
    @property
    def fingerprint(self):
        """
        Return a short hash of the canonical model document.

        """
        return levychaos.util.serialization.fingerprint(self.to_dict())

    # -------------------------------------------------------------------------
    def total_intensity(self):
        """
        Return the total jump intensity of the (truncated) measure.

        """
        return self.jumps.total_intensity(self.eps)

    # -------------------------------------------------------------------------
    def activity_class(self):
        """
        Return 'none', 'finite' or 'infinite' for the (truncated) measure.

        """
        return self.jumps.activity_class(self.eps)

    # -------------------------------------------------------------------------
    def is_finite_activity(self):
        """
        Return True iff the (truncated) measure has finite mass.

        """
        return self.activity_class() != 'infinite'

    # -------------------------------------------------------------------------
    def with_truncation(self, truncation):
        """
        Return a copy of the model with a different truncation level.

        """
        return LevyModel(self.drift, self.sigma, self.jumps, truncation,
                         self.compensate_truncation)

    # -------------------------------------------------------------------------
    def to_dict(self):
        """
        Return the model as a JSON compatible document.

        """
        doc = { 'n':     self.n,
                'drift': self.drift.tolist(),
                'sigma': self.sigma.tolist(),
                'jumps': self.jumps.to_dict() }
        if self.truncation is not None:
            doc['truncation'] = self.truncation
        if self.compensate_truncation:
            doc['compensate_truncation'] = True
        return doc


# -----------------------------------------------------------------------------
def from_dict(doc):
    """
    Return a LevyModel built from a validated model document.

    """
    doc   = levychaos.cfg.validate.model(copy.deepcopy(doc))
    jumps = levychaos.model.jumps.from_dict(doc['jumps'], doc['n'])
    return LevyModel(
        drift                 = doc['drift'],
        sigma                 = doc['sigma'],
        jumps                 = jumps,
        truncation            = doc.get('truncation'),
        compensate_truncation = doc.get('compensate_truncation', False))


# -----------------------------------------------------------------------------
def clayton_F(u, theta, eta):  # pylint: disable=C0103
    """
    Return the Clayton-family Levy copula at u.

    """
    return levychaos.model.copula.clayton_F(u, theta, eta)


# -----------------------------------------------------------------------------
def _marginal_of(spec, i):
    """
    Return marginal i of a copula-like jump measure.

    """
    if not isinstance(spec, levychaos.model.jumps.MarginalCopula):
        raise ConfigurationError(
            'Tail integrals need a marginal based jump measure.')
    if not 0 <= i < spec.n:
        raise DimensionError('Coordinate {i} out of range.'.format(i = i))
    return spec.marginals[i]


# -----------------------------------------------------------------------------
def tail_integral(spec, i, x):
    """
    Return the signed tail integral U_i(x) by adaptive quadrature.

    """
    if x == 0:
        raise DomainError('Tail integrals are not defined at x = 0.')
    return _marginal_of(spec, i).tail_quadrature(x)


# -----------------------------------------------------------------------------
def copula_levy_density(spec, x):
    """
    Return the joint Levy density of a copula-like jump measure at x.

    """
    if not isinstance(spec, levychaos.model.jumps.MarginalCopula):
        raise ConfigurationError(
            'Copula densities need a marginal based jump measure.')
    if spec.n == 1:
        raise CapabilityError(
            'The copula density is defined for n >= 2.')
    return spec.density(x)


# -----------------------------------------------------------------------------
def negmult_levy_mass(spec, k):
    """
    Return the negative multinomial Levy mass of the lattice point k.

    """
    if isinstance(spec, levychaos.model.jumps.NegativeMultinomial):
        spec = spec.measure
    if len(k) != spec.n:
        raise DimensionError('Lattice point dimension mismatch.')
    return spec.mass(k)


# =============================================================================
class Hypothesis1Report():  # pylint: disable=R0903
    """
    Outcome of an exponential moment check above a jump size threshold.

    """

    # -------------------------------------------------------------------------
    def __init__(self, lam, eps, holds, value, bound, method, diagnostic):
        """
        Return a Hypothesis1Report instance.

        """
        self.lam        = float(lam)
        self.eps        = float(eps)
        self.holds      = bool(holds)
        self.value      = value
        self.bound      = bound
        self.method     = method
        self.diagnostic = diagnostic

    # -------------------------------------------------------------------------
    def to_dict(self):
        """
        Return the report as a JSON compatible dict.

        """
        value = self.value
        if value is not None and not math.isfinite(value):
            value = 'inf'
        return { 'lambda':     self.lam,
                 'epsilon':    self.eps,
                 'holds':      self.holds,
                 'value':      value,
                 'bound':      self.bound,
                 'method':     self.method,
                 'diagnostic': self.diagnostic }


# -----------------------------------------------------------------------------
def check_hypothesis1(model, lam, eps):
    """
    Return a Hypothesis1Report for the integral of exp(lam ||x||) nu(dx).

    The integral runs over ||x|| >= eps for atomic
    and lattice measures, and over the region where
    every |x_i| >= max(eps, truncation) for density
    variants.

    """
    if not lam > 0:
        raise ParameterError('lambda must be positive.')
    if not eps > 0:
        raise ParameterError('epsilon must be positive.')
    result = model.jumps.exponential_moment(lam, eps, model.truncation)
    levychaos.log.logger.debug('Exponential moment condition at lambda={lam}, eps={eps}: '
                               '{res}', lam = lam, eps = eps, res = result)
    return Hypothesis1Report(lam = lam, eps = eps, **result)
