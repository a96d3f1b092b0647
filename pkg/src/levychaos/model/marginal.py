# -*- coding: utf-8 -*-
"""
Module of one dimensional marginal Levy measures.

Each marginal exposes its Levy density, its
signed tail integral

    U(x) =  nu([x, inf))     for x > 0
    U(x) = -nu((-inf, x])    for x < 0

and the inverse of |U| on either half line,
which is what copula sampling consumes.

"""


import functools
import math

import scipy.optimize
import scipy.special

import levychaos.model.integrate

from levychaos.exception import DomainError, NumericError, ParameterError


# =============================================================================
class Marginal():
    """
    Base class for one dimensional marginal Levy measures.

    """

    family = None
    signs  = (1,)

    # -------------------------------------------------------------------------
    def tail_at_zero(self):
        """
        Return the total mass of the positive half line.

        """
        return math.inf

    # -------------------------------------------------------------------------
    def truncated_tail(self, sign, eps):
        """
        Return the signed tail U(sign * eps), or its limit at 0 if eps is 0.

        """
        if eps > 0:
            return self.tail(sign * eps)
        if sign < 0 and -1 not in self.signs:
            return 0.0
        return sign * self.tail_at_zero()

    # -------------------------------------------------------------------------
    def density(self, x):
        """
        Return the Levy density at x.

        """
        raise NotImplementedError()

    # -------------------------------------------------------------------------
    def tail(self, x):
        """
        Return the signed tail integral U(x).

        """
        return self.tail_quadrature(x)

    # -------------------------------------------------------------------------
    def tail_quadrature(self, x):
        """
        Return the signed tail integral U(x) computed by adaptive quadrature.

        """
        _check_nonzero(x)
        if x > 0:
            return levychaos.model.integrate.quad(self.density, x, math.inf)[0]
        return -levychaos.model.integrate.quad(self.density, -math.inf, x)[0]

    # -------------------------------------------------------------------------
    def first_moment(self):
        """
        Return (value, abserr) of the integral of x over the whole measure.

        Two sided measures are integrated as the limit
        over |x| >= eps as eps -> 0, pairing x with -x.

        """
        if -1 in self.signs:
            weighted = lambda x: x * (self.density(x) - self.density(-x))
        else:
            weighted = lambda x: x * self.density(x)
        return levychaos.model.integrate.quad(weighted, 0.0, math.inf)

    # -------------------------------------------------------------------------
    def has_finite_activity(self):
        """
        Return True iff the marginal has finite total mass.

        """
        return False

    # -------------------------------------------------------------------------
    def exp_moment_diverges(self, lam):
        """
        Return True iff the integral of exp(lam |x|) over |x| >= 1 diverges.

        """
        raise NotImplementedError()

    # -------------------------------------------------------------------------
    def inverse_tail(self, level, sign, eps):
        """
        Return x with sign(x) = sign, |x| >= eps and |U(x)| = level.

        """
        target = lambda mag: abs(self.tail(sign * mag)) - level
        if target(eps) < 0.0:
            raise DomainError(
                'Tail level {lvl} exceeds the truncated tail mass.'.format(
                                                                lvl = level))
        upper = max(2.0 * eps, 1.0)
        for _ in range(200):
            if target(upper) <= 0.0:
                break
            upper *= 2.0
        else:
            raise NumericError('Could not bracket the inverse tail.')
        mag = scipy.optimize.brentq(target, eps, upper,
                                    xtol = 1e-14, rtol = 1e-12)
        return sign * mag

    # -------------------------------------------------------------------------
    def to_dict(self):
        """
        Return the marginal as a model document fragment.

        """
        raise NotImplementedError()


# =============================================================================
class GammaMarginal(Marginal):
    """
    Gamma process marginal with density gamma / x * exp(-lam x) on x > 0.

    """

    family = 'gamma'

    # -------------------------------------------------------------------------
    def __init__(self, gamma, lam):
        """
        Return a GammaMarginal instance.

        """
        if not (gamma > 0 and lam > 0):
            raise ParameterError('Gamma marginal needs gamma > 0, lambda > 0.')
        self.gamma = float(gamma)
        self.lam   = float(lam)

    # -------------------------------------------------------------------------
    def density(self, x):
        """
        Return the Levy density at x.

        """
        if x <= 0:
            return 0.0
        return self.gamma * math.exp(-self.lam * x) / x

    # -------------------------------------------------------------------------
    def tail(self, x):
        """
        Return U(x) = gamma E1(lam x) for x > 0 and 0 for x < 0.

        """
        _check_nonzero(x)
        if x < 0:
            return 0.0
        return self.gamma * float(scipy.special.exp1(self.lam * x))

    # -------------------------------------------------------------------------
    def exp_moment_diverges(self, lam):
        """
        Return True iff exp(lam x) is not integrable at infinity.

        """
        return lam >= self.lam

    # -------------------------------------------------------------------------
    def to_dict(self):
        """
        Return the marginal as a model document fragment.

        """
        return { 'family': 'gamma', 'gamma': self.gamma, 'lambda': self.lam }


# =============================================================================
class MeixnerMarginal(Marginal):
    """
    Meixner process marginal with density m exp(a x) / (x sinh(pi x)).

    """

    family = 'meixner'
    signs  = (1, -1)

    # -------------------------------------------------------------------------
    def __init__(self, m, a):
        """
        Return a MeixnerMarginal instance.

        """
        if not m > 0:
            raise ParameterError('Meixner marginal needs m > 0.')
        if not -math.pi < a < math.pi:
            raise ParameterError('Meixner marginal needs -pi < a < pi.')
        self.m = float(m)
        self.a = float(a)

    # -------------------------------------------------------------------------
    def density(self, x):
        """
        Return the Levy density at x.

        """
        if x == 0:
            return 0.0
        mag = abs(x)
        return (2.0 * self.m * math.exp(self.a * x - math.pi * mag)
                / (mag * -math.expm1(-2.0 * math.pi * mag)))

    # -------------------------------------------------------------------------
    def tail(self, x):
        """
        Return the signed tail integral U(x) by cached quadrature.

        """
        _check_nonzero(x)
        return _meixner_tail(self.m, self.a, float(x))

    # -------------------------------------------------------------------------
    def exp_moment_diverges(self, lam):
        """
        Return True iff exp(lam |x|) is not integrable at infinity.

        """
        return lam >= math.pi - abs(self.a)

    # -------------------------------------------------------------------------
    def to_dict(self):
        """
        Return the marginal as a model document fragment.

        """
        return { 'family': 'meixner', 'm': self.m, 'a': self.a }


# -----------------------------------------------------------------------------
@functools.lru_cache(maxsize = 65536)
def _meixner_tail(m, a, x):
    """
    Return the Meixner tail integral for the given parameters.

    """
    return MeixnerMarginal.tail_quadrature(MeixnerMarginal(m, a), x)


# =============================================================================
class ExponentialMarginal(Marginal):
    """
    Finite activity marginal with density c beta exp(-beta x) on x > 0.

    """

    family = 'exponential'

    # -------------------------------------------------------------------------
    def __init__(self, intensity, rate):
        """
        Return an ExponentialMarginal instance.

        """
        if not (intensity > 0 and rate > 0):
            raise ParameterError(
                'Exponential marginal needs intensity > 0, rate > 0.')
        self.intensity = float(intensity)
        self.rate      = float(rate)

    # -------------------------------------------------------------------------
    def density(self, x):
        """
        Return the Levy density at x.

        """
        if x <= 0:
            return 0.0
        return self.intensity * self.rate * math.exp(-self.rate * x)

    # -------------------------------------------------------------------------
    def tail(self, x):
        """
        Return U(x) = c exp(-beta x) for x > 0 and 0 for x < 0.

        """
        _check_nonzero(x)
        if x < 0:
            return 0.0
        return self.intensity * math.exp(-self.rate * x)

    # -------------------------------------------------------------------------
    def tail_at_zero(self):
        """
        Return the total mass c.

        """
        return self.intensity

    # -------------------------------------------------------------------------
    def inverse_tail(self, level, sign, eps):
        """
        Return x >= eps with U(x) = level in closed form.

        """
        limit = self.truncated_tail(1, eps)
        if sign < 0 or level > limit * (1.0 + 1e-12) or level <= 0:
            raise DomainError(
                'Tail level {lvl} outside the truncated range.'.format(
                                                                lvl = level))
        return max(eps, -math.log(level / self.intensity) / self.rate)

    # -------------------------------------------------------------------------
    def has_finite_activity(self):
        """
        Return True.

        """
        return True

    # -------------------------------------------------------------------------
    def exp_moment_diverges(self, lam):
        """
        Return True iff exp(lam x) is not integrable at infinity.

        """
        return lam >= self.rate

    # -------------------------------------------------------------------------
    def to_dict(self):
        """
        Return the marginal as a model document fragment.

        """
        return { 'family':    'exponential',
                 'intensity': self.intensity,
                 'rate':      self.rate }


# -----------------------------------------------------------------------------
def from_dict(doc):
    """
    Return a Marginal built from a model document fragment.

    """
    family = doc['family']
    if family == 'gamma':
        return GammaMarginal(doc['gamma'], doc['lambda'])
    if family == 'meixner':
        return MeixnerMarginal(doc['m'], doc['a'])
    if family == 'exponential':
        return ExponentialMarginal(doc['intensity'], doc['rate'])
    raise ParameterError('Unknown marginal family: {fam}'.format(fam = family))


# -----------------------------------------------------------------------------
def _check_nonzero(x):
    """
    Raise DomainError at the origin, where tail integrals are not defined.

    """
    if x == 0:
        raise DomainError('Tail integrals are not defined at x = 0.')
