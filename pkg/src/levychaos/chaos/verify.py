# -*- coding: utf-8 -*-
"""
Numerical checks of the chaotic representation of increment products.

In exact mode (no Brownian part, finite activity)
both sides of the representation are evaluated on
every path and the largest discrepancy is reported.
In mc mode the discrepancy is treated as a Monte
Carlo sample with mean zero.

Both modes also test that iterated integrals with
different H integrator sequences are uncorrelated.

"""


import itertools

import numpy

import levychaos.chaos
import levychaos.chaos.integral
import levychaos.chaos.poly
import levychaos.log
import levychaos.simulate.montecarlo

from levychaos.exception import ConfigurationError
from levychaos.exception import ParameterError


MODES  = ('exact', 'mc')
NUM_SE = 4.0


# -----------------------------------------------------------------------------
def _stats(values, seed, target = 0.0):
    """
    Return mean, se and z-score of a sample.

    """
    estimate = levychaos.simulate.montecarlo.estimate(values, seed)
    result   = estimate.to_dict()
    result['z'] = float(estimate.zscore(target))
    return result


# -----------------------------------------------------------------------------
def verify_crp(model,  # pylint: disable=R0913,R0914
               table,
               basis,
               k,
               mode,
               num_paths,
               seed,
               horizon = 1.0,
               dt      = None,
               threads = 1,
               tol     = 1e-9,
               anchor  = 0.0):
    """
    Return a report on the chaos expansion of the increment product k.

    """
    if mode not in MODES:
        raise ParameterError('Unknown verification mode: {mode}'.format(
                                                                mode = mode))
    if mode == 'exact' and (model.has_brownian
                            or not model.is_finite_activity()):
        raise ConfigurationError(
            'Exact mode needs Sigma = 0 and finite jump activity.')
    if not 0 <= anchor < horizon:
        raise ParameterError('The anchor must lie in [0, horizon).')

    window      = horizon - anchor
    expansion   = levychaos.chaos.expand_increment_product(
                                            model, table, k, anchor = anchor)
    expansion_h = levychaos.chaos.to_basis(expansion, basis)

    def functional(path):
        lhs      = levychaos.chaos.integral.increment_product(
                                            path, expansion.k, anchor, window)
        rhs      = levychaos.chaos.integral.evaluate_expansion(
                                            path, table, expansion, window)
        values_h = levychaos.chaos.integral.evaluate_terms(
                                path, table, expansion_h, window, basis = basis)
        rhs_h    = expansion_h.moment_value(window) + float(numpy.sum(values_h))
        return numpy.concatenate([[lhs - rhs, lhs - rhs_h, lhs], values_h])

    values = levychaos.simulate.montecarlo.evaluate_paths(
                                    model, functional, num_paths, seed,
                                    horizon = horizon, dt = dt,
                                    threads = threads)
    values = values.reshape(num_paths, 3 + len(expansion_h.terms))

    f_t    = expansion.moment_value(window)
    report = { 'k':         expansion.k.to_json(),
               'mode':      mode,
               'anchor':    anchor,
               'window':    window,
               'num_terms': len(expansion.terms),
               'num_terms_basis': len(expansion_h.terms),
               'f':         levychaos.chaos.poly.to_json(expansion.f, 0),
               'f_t':       f_t,
               'moment':    _stats(values[:, 2], seed, target = f_t) }

    if mode == 'exact':
        report['max_residual']       = float(numpy.max(numpy.abs(values[:, 0])))
        report['max_residual_basis'] = float(numpy.max(numpy.abs(values[:, 1])))
        report['tol']                = tol
        # H residuals are relative to the largest increment product
        scale = max(1.0, float(numpy.max(numpy.abs(values[:, 2]))))
        report['tol_basis']          = tol * scale
        passed = (    report['max_residual']       < tol
                  and report['max_residual_basis'] < report['tol_basis'])
    else:
        report['residual']       = _stats(values[:, 0], seed)
        report['residual_basis'] = _stats(values[:, 1], seed)
        passed = abs(report['residual']['z']) <= NUM_SE

    report['orthogonality'] = _orthogonality(expansion_h, values[:, 3:], seed)
    report['passed'] = bool(passed and report['orthogonality']['passed'])
    levychaos.log.logger.info('CRP check for k = {k}: passed = {ok}',
                              k = report['k'], ok = report['passed'])
    return report


# -----------------------------------------------------------------------------
def _orthogonality(expansion_h, term_values, seed):
    """
    Return covariance statistics between terms of different subspaces.

    Each H integrator sequence spans its own
    subspace; the terms of an H expansion have
    distinct sequences, so every pair is tested.

    """
    rows = list()
    for (a, b) in itertools.combinations(range(len(expansion_h.terms)), 2):
        stats = _stats(term_values[:, a] * term_values[:, b], seed)
        rows.append({ 'pair': [[p.to_json() for p in term.integrators]
                               for term in (expansion_h.terms[a],
                                            expansion_h.terms[b])],
                      'mean': stats['mean'],
                      'se':   stats['se'],
                      'z':    stats['z'] })
    max_abs_z = max((abs(row['z']) for row in rows), default = 0.0)
    return { 'pairs':     rows,
             'max_abs_z': max_abs_z,
             'passed':    bool(max_abs_z <= NUM_SE) }
