# -*- coding: utf-8 -*-
"""
Module of the negative multinomial (Pascal) Levy measure.

The Levy measure sits on the nonzero points of
N_0^n with mass

    v(k) = (|k|-1)! / (k_1! ... k_n!) * prod_i q_i^k_i,   q_i = mu lambda_i

Summed over a shell |k| = K it gives s^K / K with
s = q_1 + ... + q_n = 1 - lambda, so the shell sizes
follow a logarithmic series law and, given the
shell, the point is multinomial with weights q / s.

"""


import functools
import itertools
import math

import numpy
import scipy.optimize

from sympy.functions.combinatorial.numbers import stirling

import levychaos.log
import levychaos.multiindex

from levychaos.exception import NumericError, ParameterError


TOL_CONSTRAINT = 1e-12
TOL_TAIL       = 1e-14
MAX_SHELLS     = 100000
MAX_EXP_SHELLS = 4000


# =============================================================================
class NegativeMultinomialMeasure():
    """
    Negative multinomial Levy measure with parameters lambda, mu, lambda_i.

    """

    # -------------------------------------------------------------------------
    def __init__(self, lam, mu, lambda_i):
        """
        Return a NegativeMultinomialMeasure, enforcing lam + mu sum(lambda_i) = 1.

        """
        lambda_i = [float(value) for value in lambda_i]
        if not 0.0 < lam < 1.0:
            raise ParameterError('lambda must lie in (0, 1).')
        if not mu > 0:
            raise ParameterError('mu must be positive.')
        if not lambda_i:
            raise ParameterError('lambda_i must not be empty.')
        for value in lambda_i:
            if not 0.0 < mu * value < 1.0:
                raise ParameterError('Each mu * lambda_i must lie in (0, 1).')
        residual = lam + mu * sum(lambda_i) - 1.0
        if abs(residual) > TOL_CONSTRAINT:
            raise ParameterError(
                'lambda + mu * sum(lambda_i) = 1 violated by {res:.3g}.'.format(
                                                            res = residual))
        self.lam      = float(lam)
        self.mu       = float(mu)
        self.lambda_i = lambda_i
        self.q        = numpy.array([mu * value for value in lambda_i])
        self.s        = float(self.q.sum())

    # -------------------------------------------------------------------------
    @property
    def n(self):
        """
        Return the dimension.

        """
        return len(self.lambda_i)

    # -------------------------------------------------------------------------
    def mass(self, k):
        """
        Return the Levy mass of the lattice point k (|k| >= 1).

        """
        k      = levychaos.multiindex.MultiIndex.label(k)
        degree = k.degree
        if degree <= 170:
            return (math.factorial(degree - 1) / k.factorial
                    * math.prod(q_i ** k_i for (q_i, k_i) in zip(self.q, k)))
        log_mass = (math.lgamma(degree)
                    - sum(math.lgamma(k_i + 1) for k_i in k)
                    + sum(k_i * math.log(q_i)
                          for (q_i, k_i) in zip(self.q, k) if k_i))
        return math.exp(log_mass)

    # -------------------------------------------------------------------------
    def total_mass(self):
        """
        Return the total Levy mass -log(lambda).

        """
        return -math.log(self.lam)

    # -------------------------------------------------------------------------
    def sample(self, rng, count):
        """
        Return count jump vectors as an integer array of shape (count, n).

        """
        sizes = rng.logseries(self.s, size = count)
        probs = self.q / self.s
        return numpy.array([rng.multinomial(size, probs) for size in sizes],
                           dtype = float).reshape(count, self.n)

    # -------------------------------------------------------------------------
    def moment(self, p):
        """
        Return (value, tail_bound, num_shells) for the integral of k^p.

        Shell K contributes (s^K / K) E[k^p] with k
        multinomial(K, q / s). The multinomial power
        moment is expanded in falling factorials using
        Stirling numbers of the second kind.

        """
        p      = levychaos.multiindex.MultiIndex.label(p)
        degree = p.degree
        terms  = _falling_factorial_terms(tuple(p), tuple(self.q / self.s))

        value = 0.0
        for num_shells in range(1, MAX_SHELLS + 1):
            shell = sum(coef * _falling(num_shells, order)
                        for (coef, order) in terms)
            value += self.s ** num_shells / num_shells * shell
            bound = _shell_tail_bound(self.s, degree, num_shells)
            if bound is not None and bound < TOL_TAIL:
                levychaos.log.logger.debug(
                    'negative multinomial m_{p} summed over {num} shells',
                    p = tuple(p), num = num_shells)
                return (value, bound, num_shells)
        raise NumericError('Negative multinomial moment series did not reach '
                           'the tail tolerance.', residual = bound)

    # -------------------------------------------------------------------------
    def exponential_moment(self, lam, eps):
        """
        Return a dict describing the sum of exp(lam ||k||) v(k) over ||k|| >= eps.

        Convergence is decided by sum_i q_i exp(lam) < 1,
        then by the axis test and the shell growth rate.
        Whenever sum_i q_i exp(lam sqrt(n)) < 1 the first
        test already holds, so that simpler sufficient
        condition always implies a positive report.

        """
        ratio = self.s * math.exp(lam)
        if ratio < 1.0:
            return self._sum_exponential(lam, eps, ratio = ratio)
        if float(self.q.max()) * math.exp(lam) >= 1.0:
            return { 'holds':      False,
                     'value':      math.inf,
                     'bound':      None,
                     'method':     'series',
                     'diagnostic': 'max(mu lambda_i) exp(lam) >= 1: the '
                                   'series diverges along a coordinate axis.' }
        rate = self.growth_rate(lam)
        if rate > 1e-12:
            return { 'holds':      False,
                     'value':      math.inf,
                     'bound':      None,
                     'method':     'series',
                     'diagnostic': 'shell growth rate {r:.6g} > 0: the series '
                                   'diverges.'.format(r = rate) }
        if rate > -1e-12:
            return { 'holds':      False,
                     'value':      None,
                     'bound':      None,
                     'method':     'series',
                     'diagnostic': 'shell growth rate is zero to working '
                                   'precision; convergence not certified.' }
        return self._sum_exponential(lam, eps, rate = rate)

    # -------------------------------------------------------------------------
    def growth_rate(self, lam):
        """
        Return the exponential growth rate of the shells of the exp-moment series.

        The log of shell K behaves like K times the
        maximum over the simplex of

            sum_i w_i log(q_i / w_i) + lam ||w||

        """
        log_q = numpy.log(self.q)

        def negative_rate(z):
            weights = numpy.exp(z - z.max())
            weights = weights / weights.sum()
            entropy = numpy.sum(weights * (log_q - numpy.log(weights)))
            return -(entropy + lam * numpy.linalg.norm(weights))

        starts = [numpy.zeros(self.n), log_q]
        for i in range(self.n):
            start    = numpy.zeros(self.n)
            start[i] = 5.0
            starts.append(start)
        best = min(scipy.optimize.minimize(negative_rate, start,
                                           method = 'Nelder-Mead',
                                           options = { 'xatol': 1e-12,
                                                       'fatol': 1e-14,
                                                       'maxiter': 20000 }).fun
                   for start in starts)
        return -float(best)

    # -------------------------------------------------------------------------
    def _sum_exponential(self, lam, eps, ratio = None, rate = None):
        """
        Return the report for a convergent exponential moment series.

        """
        value = 0.0
        bound = math.inf
        for num_shells in range(1, MAX_EXP_SHELLS + 1):
            shell = 0.0
            for k in levychaos.multiindex.enumerate_degree(self.n, num_shells):
                norm = math.sqrt(sum(k_i * k_i for k_i in k))
                if norm >= eps:
                    shell += math.exp(lam * norm) * self.mass(k)
            value += shell
            if ratio is not None:
                bound = (ratio ** (num_shells + 1)
                         / ((num_shells + 1) * (1.0 - ratio)))
            else:
                factor = math.exp(rate)
                bound  = shell * factor / (1.0 - factor)
            if bound < TOL_TAIL * max(value, 1.0):
                break
        return { 'holds':      True,
                 'value':      value,
                 'bound':      bound,
                 'method':     'series' if ratio is not None else 'series-rate',
                 'diagnostic': 'summed {num} shells'.format(num = num_shells) }

    # -------------------------------------------------------------------------
    def to_dict(self):
        """
        Return the jump measure as a model document fragment.

        """
        return { 'kind':     'negative_multinomial',
                 'lambda':   self.lam,
                 'mu':       self.mu,
                 'lambda_i': list(self.lambda_i) }


# -----------------------------------------------------------------------------
def _falling(num, order):
    """
    Return the falling factorial num (num - 1) ... (num - order + 1).

    """
    if order > num:
        return 0
    return math.perm(num, order)


# -----------------------------------------------------------------------------
@functools.lru_cache(maxsize = 4096)
def _falling_factorial_terms(p, weights):
    """
    Return (coefficient, order) pairs with E[k^p] = sum coef * K^(order).

    """
    ranges = [range(1, p_i + 1) if p_i else range(0, 1) for p_i in p]
    terms  = []
    for r in itertools.product(*ranges):
        coef = 1.0
        for (p_i, r_i, w_i) in zip(p, r, weights):
            coef *= float(stirling(p_i, r_i)) * w_i ** r_i
        terms.append((coef, sum(r)))
    return tuple(terms)


# -----------------------------------------------------------------------------
def _shell_tail_bound(s, degree, num_shells):
    """
    Return a bound on the shells beyond num_shells, or None if not yet valid.

    Shell K is bounded by K^(degree-1) s^K and the
    ratio of consecutive bounds beyond num_shells is
    at most s ((K+2)/(K+1))^(degree-1).

    """
    ratio = s * ((num_shells + 2) / (num_shells + 1)) ** (degree - 1)
    if ratio >= 1.0:
        return None
    return ((num_shells + 1) ** (degree - 1) * s ** (num_shells + 1)
            / (1.0 - ratio))
