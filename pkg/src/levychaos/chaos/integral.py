# -*- coding: utf-8 -*-
"""
Pathwise evaluation of iterated integrals against Teugels martingales.

Each integrator dM = sum_q w_q dY^q splits into

    - a jump part, sum_q w_q prod_i (dX_i)^q_i at every jump,
    - a Brownian part, sum_i w_(e_i) dB_i, attributed to the
      right end of each grid step,
    - a Lebesgue part c ds with c = sum_q w_q c_q, where
      c_q = -m_q for |q| >= 2 and c_(e_i) = a_i - m_(e_i).

Between events every nested integral is a polynomial
in time, which is integrated in closed form. At an
event the inner integrals enter with their left
limits, so a jump at time s never integrates against
itself. The outermost integral includes the right end
of the window.

"""


import numpy
import numpy.polynomial

import levychaos.multiindex
import levychaos.simulate

from levychaos.exception import ConfigurationError
from levychaos.exception import DomainError


TOL_WINDOW = 1e-12


# =============================================================================
class Integrator():
    """
    The jump, Brownian and Lebesgue parts of one integrator on one path.

    """

    # -------------------------------------------------------------------------
    def __init__(self, path, table, weights):
        """
        Return the Integrator of sum_q weights[q] Y^q.

        """
        self.indices  = [levychaos.multiindex.MultiIndex.label(q)
                         for q in weights]
        self.weights  = numpy.array([weights[q] for q in weights],
                                    dtype = float)
        self.exps     = numpy.array(self.indices, dtype = float).reshape(
                                                    len(self.indices), path.n)
        self.brownian = numpy.zeros(path.n)
        rate = 0.0
        for (q, weight) in zip(self.indices, self.weights):
            coordinate = q.unit_coordinate
            if coordinate is None:
                rate -= weight * table[q]
            else:
                rate += weight * (path.drift[coordinate] - table[q])
                self.brownian[coordinate] += weight
        self.rate = rate

    # -------------------------------------------------------------------------
    def event_weight(self, jump, increment):
        """
        Return the integrator increment at one event.

        """
        value = 0.0
        if jump is not None:
            value += float(self.weights @ numpy.prod(jump ** self.exps, axis = 1))
        if increment is not None:
            value += float(self.brownian @ increment)
        return value


# -----------------------------------------------------------------------------
def integrator_weights(label, basis = None):
    """
    Return {q: w_q} for a Teugels label, or for H^label if a basis is given.

    """
    label = levychaos.multiindex.MultiIndex.label(label)
    if basis is None:
        return { label: 1.0 }
    if label not in basis.retained:
        raise ConfigurationError(
            'Index {p} is not a retained basis element.'.format(
                                                            p = list(label)))
    row = basis.coefficients[basis.retained.index(label)]
    return { q: float(value) for (q, value) in zip(basis.indices, row)
                             if value != 0.0 }


# -----------------------------------------------------------------------------
def events(path, start, end):
    """
    Return [(time, jump or None, increment or None)] in (start, end].

    """
    merged = dict()
    lo = numpy.searchsorted(path.times, start, side = 'right')
    hi = numpy.searchsorted(path.times, end,   side = 'right')
    for idx in range(lo, hi):
        merged[float(path.times[idx])] = [path.jumps[idx], None]
    lo = numpy.searchsorted(path.grid_times, start, side = 'right')
    hi = numpy.searchsorted(path.grid_times, end,   side = 'right')
    for idx in range(lo, hi):
        entry = merged.setdefault(float(path.grid_times[idx]), [None, None])
        entry[1] = path.increments[idx]
    return [(time, jump, increment)
            for (time, (jump, increment)) in sorted(merged.items())]


# -----------------------------------------------------------------------------
def _segment(values, start, rates, exps):
    """
    Return the nested integrals as polynomials on a segment from start.

    """
    num_levels = len(values)
    polys = [None] * num_levels
    inner = numpy.polynomial.Polynomial([1.0])
    for level in reversed(range(num_levels)):
        poly = numpy.polynomial.Polynomial([values[level]])
        if rates[level] != 0.0:
            integrand = (numpy.polynomial.Polynomial.basis(exps[level])
                         * inner * rates[level])
            poly = poly + integrand.integ(lbnd = start)
        polys[level] = poly
        inner = poly
    return polys


# -----------------------------------------------------------------------------
def _nested(weights, rates, event_times, start, end, exps):
    """
    Return the nested integral of prod_j t_j^exps[j] over one window.

    weights[e][j] is the increment of integrator j
    at event e; level 0 is the outermost integral.

    """
    num_levels = len(exps)
    values = [0.0] * num_levels
    for (time, weight) in zip(event_times, weights):
        polys = _segment(values, start, rates, exps)
        left  = [float(poly(time)) for poly in polys] + [1.0]
        values = [left[j] + time ** exps[j] * left[j + 1] * weight[j]
                  for j in range(num_levels)]
        start = time
    return float(_segment(values, start, rates, exps)[0](end))


# -----------------------------------------------------------------------------
def check_window(path, t0, t):
    """
    Raise DomainError unless 0 <= t0 and t0 + t <= horizon.

    """
    if t0 < 0 or t < 0 or t0 + t > path.horizon * (1.0 + TOL_WINDOW):
        raise DomainError(
            'Window [{t0}, {t1}] outside [0, {h}].'.format(
                                t0 = t0, t1 = t0 + t, h = path.horizon))


# -----------------------------------------------------------------------------
def evaluate_iterated_integral(path, table, term, t0, t, basis = None):
    """
    Return the iterated integral of one chaos term over (t0, t0 + t].

    Integrators label Teugels martingales, or the
    orthogonalized martingales of basis if given.

    """
    check_window(path, t0, t)
    t0  = float(t0)
    end = t0 + float(t)
    if term.m == 0:
        return sum(coef for (_, coef) in term.monomials(t))

    integrators = [Integrator(path, table, integrator_weights(p, basis))
                   for p in term.integrators]
    rates   = [integrator.rate for integrator in integrators]
    window  = events(path, t0, end)
    times   = [time for (time, _, _) in window]
    weights = [[integrator.event_weight(jump, increment)
                for integrator in integrators]
               for (_, jump, increment) in window]

    return sum(coef * _nested(weights, rates, times, t0, end, list(exps))
               for (exps, coef) in term.monomials(t))


# -----------------------------------------------------------------------------
def evaluate_terms(path, table, expansion, t, basis = None):
    """
    Return the value of every term of the expansion on the path.

    """
    if expansion.basis is not None and basis is None:
        raise ConfigurationError('An H basis expansion needs its basis.')
    t0 = float(expansion.anchor)
    return numpy.array([evaluate_iterated_integral(path, table, term, t0, t,
                                                   basis = basis)
                        for term in expansion.terms])


# -----------------------------------------------------------------------------
def evaluate_expansion(path, table, expansion, t, basis = None):
    """
    Return f(t) plus the sum of all terms on the path.

    """
    return (expansion.moment_value(t)
            + float(numpy.sum(evaluate_terms(path, table, expansion, t,
                                             basis = basis))))


# -----------------------------------------------------------------------------
def increment_product(path, k, t0, t):
    """
    Return prod_i (X_i(t0 + t) - X_i(t0))^k_i.

    """
    check_window(path, t0, t)
    end  = min(float(t0) + float(t), path.horizon)
    diff = (levychaos.simulate.process_value(path, end)
            - levychaos.simulate.process_value(path, float(t0)))
    return float(numpy.prod(diff ** numpy.asarray(k, dtype = float)))
