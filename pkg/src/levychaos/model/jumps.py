# -*- coding: utf-8 -*-
"""
Module of jump measure specifications.

The set of jump measures is closed:

    Discrete             - finitely many atoms with intensities.
    MarginalCopula       - marginal Levy densities glued by a
                           Clayton-family Levy copula.
    GammaCopula          - MarginalCopula with gamma marginals.
    MeixnerCopula        - MarginalCopula with Meixner marginals.
    NegativeMultinomial  - Pascal measure on the integer lattice.

Every variant answers the same questions: total
intensity above a truncation level, jump sampling,
power moments and exponential moments. The
truncation level eps is a property of the model and
is passed in by LevyModel; density variants restrict
to the region where every |x_i| >= eps, the lattice
and atomic variants ignore it.

"""


import math

import numpy

import levychaos.log
import levychaos.model.copula
import levychaos.model.integrate
import levychaos.model.marginal
import levychaos.model.negmult
import levychaos.multiindex

from levychaos.exception import ConfigurationError
from levychaos.exception import DimensionError
from levychaos.exception import DomainError
from levychaos.exception import NumericError
from levychaos.exception import ParameterError


METHOD_EXACT      = 'exact-sum'
METHOD_QUADRATURE = 'quadrature'
METHOD_SERIES     = 'series'


# =============================================================================
class MomentValue():  # pylint: disable=R0903
    """
    A jump moment with the method that produced it and an error bound.

    """

    # -------------------------------------------------------------------------
    def __init__(self, value, method, error_bound, meta = None):
        """
        Return a MomentValue instance.

        """
        self.value       = float(value)
        self.method      = method
        self.error_bound = float(error_bound)
        self.meta        = meta or dict()


# =============================================================================
class JumpMeasure():
    """
    Base class for jump measure specifications.

    """

    kind = None

    # -------------------------------------------------------------------------
    @property
    def n(self):
        """
        Return the dimension.

        """
        raise NotImplementedError()

    # -------------------------------------------------------------------------
    def total_intensity(self, eps):
        """
        Return the total jump intensity above the truncation level.

        """
        raise NotImplementedError()

    # -------------------------------------------------------------------------
    def activity_class(self, eps):
        """
        Return 'none', 'finite' or 'infinite'.

        """
        intensity = self.total_intensity(eps)
        if intensity == 0.0:
            return 'none'
        if math.isfinite(intensity):
            return 'finite'
        return 'infinite'

    # -------------------------------------------------------------------------
    def sample(self, rng, count, eps):
        """
        Return count i.i.d. jumps from the normalized measure, shape (count, n).

        """
        raise NotImplementedError()

    # -------------------------------------------------------------------------
    def moment(self, p, eps):
        """
        Return the MomentValue of the integral of x^p over the measure.

        """
        raise NotImplementedError()

    # -------------------------------------------------------------------------
    def small_jump_mean(self, eps):
        """
        Return the mean vector of the jumps removed by truncation at eps.

        Zero unless the variant restricts its
        support at eps.

        """
        return numpy.zeros(self.n)

    # -------------------------------------------------------------------------
    def exponential_moment(self, lam, eps, truncation):
        """
        Return a dict with the integral of exp(lam ||x||) above eps.

        """
        raise NotImplementedError()

    # -------------------------------------------------------------------------
    def to_dict(self):
        """
        Return the jump measure as a model document fragment.

        """
        raise NotImplementedError()


# =============================================================================
class Discrete(JumpMeasure):
    """
    Finite atomic jump measure.

    """

    kind = 'discrete'

    # -------------------------------------------------------------------------
    def __init__(self, atoms, rates, n = None):
        """
        Return a Discrete measure with the given jump vectors and intensities.

        """
        atoms = [[float(value) for value in atom] for atom in atoms]
        rates = [float(rate) for rate in rates]
        if len(atoms) != len(rates):
            raise DimensionError('Each atom needs exactly one intensity.')
        if n is None:
            if not atoms:
                raise DimensionError('An empty measure needs an explicit n.')
            n = len(atoms[0])
        for (atom, rate) in zip(atoms, rates):
            if len(atom) != n:
                raise DimensionError(
                    'Atom {x} does not have dimension {n}.'.format(x = atom,
                                                                   n = n))
            if not any(atom):
                raise ParameterError('Atoms must be nonzero jump vectors.')
            if not rate > 0:
                raise ParameterError('Atom intensities must be positive.')
        self._n    = int(n)
        self.atoms = numpy.array(atoms, dtype = float).reshape(len(atoms), n)
        self.rates = numpy.array(rates, dtype = float)

    # -------------------------------------------------------------------------
    @property
    def n(self):
        """
        Return the dimension.

        """
        return self._n

    # -------------------------------------------------------------------------
    def total_intensity(self, eps):
        """
        Return the sum of the atom intensities.

        """
        return float(self.rates.sum())

    # -------------------------------------------------------------------------
    def sample(self, rng, count, eps):
        """
        Return count atoms drawn with probability proportional to intensity.

        """
        if count == 0:
            return numpy.zeros((0, self.n))
        if not self.rates.size:
            raise ConfigurationError('Cannot sample from an empty measure.')
        choice = rng.choice(self.rates.size,
                            size = count,
                            p    = self.rates / self.rates.sum())
        return self.atoms[choice]

    # -------------------------------------------------------------------------
    def moment(self, p, eps):
        """
        Return the exact weighted atom sum of x^p.

        """
        if not self.rates.size:
            return MomentValue(0.0, METHOD_EXACT, 0.0)
        powers = numpy.prod(self.atoms ** numpy.asarray(p, dtype = float),
                            axis = 1)
        return MomentValue(float(numpy.dot(self.rates, powers)),
                           METHOD_EXACT,
                           0.0)

    # -------------------------------------------------------------------------
    def exponential_moment(self, lam, eps, truncation):
        """
        Return the finite sum of r_j exp(lam ||x_j||) over ||x_j|| >= eps.

        """
        norms = numpy.linalg.norm(self.atoms, axis = 1)
        keep  = norms >= eps
        value = float(numpy.dot(self.rates[keep],
                                numpy.exp(lam * norms[keep])))
        return { 'holds':      True,
                 'value':      value,
                 'bound':      0.0,
                 'method':     METHOD_EXACT,
                 'diagnostic': 'finite atom sum' }

    # -------------------------------------------------------------------------
    def to_dict(self):
        """
        Return the jump measure as a model document fragment.

        """
        return { 'kind':  'discrete',
                 'atoms': [{ 'x': atom.tolist(), 'rate': float(rate) }
                           for (atom, rate) in zip(self.atoms, self.rates)] }


# =============================================================================
class MarginalCopula(JumpMeasure):
    """
    Marginal Levy densities glued by a Clayton-family Levy copula.

    For n = 1 the copula is the identity and the
    measure is the marginal itself.

    """

    kind = 'marginal_copula'

    # -------------------------------------------------------------------------
    def __init__(self, marginals, theta, eta):
        """
        Return a MarginalCopula measure.

        """
        if not marginals:
            raise DimensionError('At least one marginal is required.')
        if not theta > 0:
            raise ParameterError('Clayton parameter theta must be positive.')
        if not 0.0 <= eta <= 1.0:
            raise ParameterError('Clayton parameter eta must lie in [0, 1].')
        self.marginals = list(marginals)
        self.theta     = float(theta)
        self.eta       = float(eta)

    # -------------------------------------------------------------------------
    @property
    def n(self):
        """
        Return the dimension.

        """
        return len(self.marginals)

    # -------------------------------------------------------------------------
    def density(self, x):
        """
        Return the joint Levy density at x (no zero component).

        """
        if len(x) != self.n:
            raise DimensionError('Point and measure dimensions differ.')
        if any(value == 0 for value in x):
            raise DomainError('The copula density is not defined on the axes.')
        if self.n == 1:
            return self.marginals[0].density(x[0])
        margins = [marg.density(value)
                   for (marg, value) in zip(self.marginals, x)]
        if not all(margins):
            return 0.0
        tails = [marg.tail(value) for (marg, value) in zip(self.marginals, x)]
        return (levychaos.model.copula.clayton_mixed_partial(
                                            tails, self.theta, self.eta)
                * math.prod(margins))

    # -------------------------------------------------------------------------
    def orthant_masses(self, eps):
        """
        Return a list of (signs, bounds, mass) for orthants with positive mass.

        """
        result = []
        for signs in levychaos.model.copula.orthants(
                                    [marg.signs for marg in self.marginals]):
            bounds = [marg.truncated_tail(sign, eps)
                      for (marg, sign) in zip(self.marginals, signs)]
            if any(not math.isfinite(value) for value in bounds):
                mass = math.inf
            else:
                mass = levychaos.model.copula.orthant_mass(
                                            bounds, self.theta, self.eta)
            if mass > 0.0:
                result.append((signs, bounds, mass))
        return result

    # -------------------------------------------------------------------------
    def total_intensity(self, eps):
        """
        Return the truncated total intensity in closed form.

        """
        return float(sum(mass for (_, _, mass) in self.orthant_masses(eps)))

    # -------------------------------------------------------------------------
    def sample(self, rng, count, eps):
        """
        Return count jumps from the normalized truncated measure.

        """
        if count == 0:
            return numpy.zeros((0, self.n))
        regions = self.orthant_masses(eps)
        masses  = numpy.array([mass for (_, _, mass) in regions])
        if not numpy.all(numpy.isfinite(masses)):
            raise ConfigurationError(
                'The truncated intensity is infinite; a positive truncation '
                'level is required.')
        counts  = rng.multinomial(count, masses / masses.sum())
        jumps   = []
        for ((signs, bounds, _), num) in zip(regions, counts):
            levels = levychaos.model.copula.sample_orthant(
                                            rng, bounds, self.theta, num)
            for row in levels:
                jumps.append([marg.inverse_tail(level, sign, eps)
                              for (marg, sign, level)
                              in zip(self.marginals, signs, row)])
        jumps = numpy.array(jumps, dtype = float).reshape(count, self.n)
        return jumps[rng.permutation(count)]

    # -------------------------------------------------------------------------
    def _ranges(self, signs, eps):
        """
        Return quadrature ranges for an orthant, innermost coordinate first.

        """
        ranges = []
        for sign in signs:
            ranges.append((eps, math.inf) if sign > 0 else (-math.inf, -eps))
        return list(reversed(ranges))

    # -------------------------------------------------------------------------
    def integrate(self, weight, eps):
        """
        Return (value, abserr) of the integral of weight(x) nu(dx) above eps.

        """
        def integrand(*args):
            x = args[::-1]
            return weight(x) * self.density(x)

        value  = 0.0
        abserr = 0.0
        for (signs, _, _) in self.orthant_masses(eps):
            (part, err) = levychaos.model.integrate.nquad(
                                        integrand, self._ranges(signs, eps))
            value  += part
            abserr += err
        return (value, abserr)

    # -------------------------------------------------------------------------
    def moment(self, p, eps):
        """
        Return the integral of x^p over the truncated region by quadrature.

        """
        if eps == 0.0 and self.n > 1:
            raise ConfigurationError(
                'Moments of copula measures need a positive truncation level.')
        powers = tuple(p)
        (value, abserr) = self.integrate(
            lambda x: math.prod(x_i ** p_i for (x_i, p_i) in zip(x, powers)),
            eps)
        return MomentValue(value, METHOD_QUADRATURE, abserr)

    # -------------------------------------------------------------------------
    def small_jump_mean(self, eps):
        """
        Return the integral of x over the region where some |x_i| < eps.

        Coordinate i of the full measure integrates
        to the first moment of marginal i, since jumps
        with x_i = 0 do not contribute to it.

        """
        if eps == 0.0:
            return numpy.zeros(self.n)
        result = numpy.zeros(self.n)
        for (i, marg) in enumerate(self.marginals):
            (full, _) = marg.first_moment()
            unit      = levychaos.multiindex.MultiIndex.unit(self.n, i)
            result[i] = full - self.moment(unit, eps).value
        return result

    # -------------------------------------------------------------------------
    def exponential_moment(self, lam, eps, truncation):
        """
        Return the integral of exp(lam ||x||) over min |x_i| >= eps.

        Divergence is certified from the marginals
        before any quadrature is attempted.

        """
        eps = max(eps, truncation or 0.0)
        for (i, marg) in enumerate(self.marginals):
            if marg.exp_moment_diverges(lam):
                return { 'holds':      False,
                         'value':      math.inf,
                         'bound':      None,
                         'method':     METHOD_QUADRATURE,
                         'diagnostic': 'marginal {i} ({fam}) has no exponential '
                                       'moment of order {lam}'.format(
                                                i   = i,
                                                fam = marg.family,
                                                lam = lam) }
        try:
            (value, abserr) = self.integrate(
                        lambda x: math.exp(lam * math.sqrt(
                                        sum(x_i * x_i for x_i in x))),
                        eps)
        except NumericError as err:
            return { 'holds':      False,
                     'value':      None,
                     'bound':      err.residual,
                     'method':     METHOD_QUADRATURE,
                     'diagnostic': str(err) }
        return { 'holds':      True,
                 'value':      value,
                 'bound':      abserr,
                 'method':     METHOD_QUADRATURE,
                 'diagnostic': 'quadrature converged' }

    # -------------------------------------------------------------------------
    def to_dict(self):
        """
        Return the jump measure as a model document fragment.

        """
        return { 'kind':      'marginal_copula',
                 'marginals': [marg.to_dict() for marg in self.marginals],
                 'theta':     self.theta,
                 'eta':       self.eta }


# =============================================================================
class GammaCopula(MarginalCopula):
    """
    Clayton-glued gamma marginals gamma_i / x exp(-lambda_i x).

    """

    kind = 'gamma_copula'

    # -------------------------------------------------------------------------
    def __init__(self, gamma, lam, theta, eta):
        """
        Return a GammaCopula measure.

        """
        if len(gamma) != len(lam):
            raise DimensionError('gamma and lambda must have equal length.')
        super().__init__(
            [levychaos.model.marginal.GammaMarginal(g_i, l_i)
             for (g_i, l_i) in zip(gamma, lam)],
            theta, eta)

    # -------------------------------------------------------------------------
    def to_dict(self):
        """
        Return the jump measure as a model document fragment.

        """
        return { 'kind':   'gamma_copula',
                 'gamma':  [marg.gamma for marg in self.marginals],
                 'lambda': [marg.lam for marg in self.marginals],
                 'theta':  self.theta,
                 'eta':    self.eta }


# =============================================================================
class MeixnerCopula(MarginalCopula):
    """
    Clayton-glued Meixner marginals m_i exp(a_i x) / (x sinh(pi x)).

    """

    kind = 'meixner_copula'

    # -------------------------------------------------------------------------
    def __init__(self, m, a, theta, eta):
        """
        Return a MeixnerCopula measure.

        """
        if len(m) != len(a):
            raise DimensionError('m and a must have equal length.')
        super().__init__(
            [levychaos.model.marginal.MeixnerMarginal(m_i, a_i)
             for (m_i, a_i) in zip(m, a)],
            theta, eta)

    # -------------------------------------------------------------------------
    def to_dict(self):
        """
        Return the jump measure as a model document fragment.

        """
        return { 'kind':  'meixner_copula',
                 'm':     [marg.m for marg in self.marginals],
                 'a':     [marg.a for marg in self.marginals],
                 'theta': self.theta,
                 'eta':   self.eta }


# =============================================================================
class NegativeMultinomial(JumpMeasure):
    """
    Negative multinomial jump measure on the nonzero lattice points.

    """

    kind = 'negative_multinomial'

    # -------------------------------------------------------------------------
    def __init__(self, lam, mu, lambda_i):
        """
        Return a NegativeMultinomial jump measure.

        """
        self.measure = levychaos.model.negmult.NegativeMultinomialMeasure(
                                                            lam, mu, lambda_i)

    # -------------------------------------------------------------------------
    @property
    def n(self):
        """
        Return the dimension.

        """
        return self.measure.n

    # -------------------------------------------------------------------------
    def total_intensity(self, eps):
        """
        Return -log(lambda).

        """
        return self.measure.total_mass()

    # -------------------------------------------------------------------------
    def sample(self, rng, count, eps):
        """
        Return count lattice jumps.

        """
        return self.measure.sample(rng, count)

    # -------------------------------------------------------------------------
    def moment(self, p, eps):
        """
        Return the series value of the integral of k^p.

        """
        (value, bound, num_shells) = self.measure.moment(p)
        return MomentValue(value, METHOD_SERIES, bound,
                           meta = { 'shells': num_shells })

    # -------------------------------------------------------------------------
    def exponential_moment(self, lam, eps, truncation):
        """
        Return the exponential moment series report.

        """
        return self.measure.exponential_moment(lam, eps)

    # -------------------------------------------------------------------------
    def to_dict(self):
        """
        Return the jump measure as a model document fragment.

        """
        return self.measure.to_dict()


# -----------------------------------------------------------------------------
def from_dict(doc, n):
    """
    Return a JumpMeasure built from a model document fragment.

    """
    kind = doc['kind']
    if kind == 'discrete':
        return Discrete(atoms = [atom['x'] for atom in doc['atoms']],
                        rates = [atom['rate'] for atom in doc['atoms']],
                        n     = n)
    if kind == 'marginal_copula':
        return MarginalCopula(
            [levychaos.model.marginal.from_dict(marg)
             for marg in doc['marginals']],
            doc['theta'], doc['eta'])
    if kind == 'gamma_copula':
        return GammaCopula(doc['gamma'], doc['lambda'],
                           doc['theta'], doc['eta'])
    if kind == 'meixner_copula':
        return MeixnerCopula(doc['m'], doc['a'], doc['theta'], doc['eta'])
    if kind == 'negative_multinomial':
        return NegativeMultinomial(doc['lambda'], doc['mu'], doc['lambda_i'])
    raise ParameterError('Unknown jump measure kind: {kind}'.format(
                                                                kind = kind))
