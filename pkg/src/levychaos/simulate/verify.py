# -*- coding: utf-8 -*-
"""
Monte Carlo checks of compensators and strong orthogonality.

"""


import itertools

import numpy

import levychaos.log
import levychaos.multiindex
import levychaos.simulate
import levychaos.simulate.montecarlo


NUM_SE = 4.0


# -----------------------------------------------------------------------------
def _zrow(estimate, pos, target = 0.0):
    """
    Return mean, se and z-score of one component of a vector estimate.

    """
    mean = float(numpy.asarray(estimate.mean)[pos])
    se   = float(numpy.asarray(estimate.se)[pos])
    diff = mean - target
    if diff == 0.0:
        zscore = 0.0
    elif se == 0.0:
        zscore = float('inf')
    else:
        zscore = diff / se
    return { 'mean': mean, 'se': se, 'z': zscore }


# -----------------------------------------------------------------------------
def _summary(rows):
    """
    Return max |z| over report rows and whether it is within the band.

    """
    max_abs_z = max((abs(row['z']) for row in rows), default = 0.0)
    return { 'max_abs_z': max_abs_z, 'passed': bool(max_abs_z <= NUM_SE) }


# -----------------------------------------------------------------------------
def verify_moments(model,  # pylint: disable=R0913
                   table,
                   max_degree,
                   num_paths,
                   seed,
                   horizon = 1.0,
                   dt      = None,
                   threads = 1):
    """
    Return a report comparing E[X^p(T)] with m_p T for 1 <= |p| <= max_degree.

    For p = e_i the full coordinate X_i is used, so
    the target is the expectation rate. Equivalently
    each row tests E[Y^p(T)] = 0.

    """
    indices = levychaos.multiindex.enumerate_upto(model.n, max_degree)

    def functional(path):
        values = levychaos.simulate.power_jumps(path, indices, horizon)
        state  = levychaos.simulate.process_value(path, horizon)
        for (pos, p) in enumerate(indices):
            if p.unit_coordinate is not None:
                values[pos] = state[p.unit_coordinate]
        return values

    estimate = levychaos.simulate.montecarlo.mc_expectation(
                                    model, functional, num_paths, seed,
                                    horizon = horizon, dt = dt,
                                    threads = threads)
    rows = list()
    for (pos, p) in enumerate(indices):
        target = table[p] * horizon
        row    = { 'index': p.to_json(), 'target': target }
        row.update(_zrow(estimate, pos, target))
        rows.append(row)
    report = { 'kind': 'moments', 'rows': rows, 'n': estimate.count,
               'seed': seed }
    report.update(_summary(rows))
    levychaos.log.logger.info('Moment check: max |z| = {z:.3f}',
                              z = report['max_abs_z'])
    return report


# -----------------------------------------------------------------------------
def verify_orthogonality(model,  # pylint: disable=R0913
                         basis,
                         table,
                         num_paths,
                         seed,
                         horizon = 1.0,
                         dt      = None,
                         threads = 1):
    """
    Return a report of E[H^p(T)], E[H^p(T) H^q(T)] and E[[H^p, H^q](T)].

    Every mean should vanish for p != q.

    """
    retained = basis.retained
    size     = len(retained)
    pairs    = list(itertools.combinations(range(size), 2))

    def functional(path):
        values   = levychaos.simulate.evaluate_basis(path, basis, table,
                                                     horizon)
        brackets = levychaos.simulate.bracket_basis(path, basis, table,
                                                    horizon)
        products = [values[a] * values[b] for (a, b) in pairs]
        cross    = [brackets[a, b] for (a, b) in pairs]
        return numpy.concatenate([values, products, cross])

    estimate = levychaos.simulate.montecarlo.mc_expectation(
                                    model, functional, num_paths, seed,
                                    horizon = horizon, dt = dt,
                                    threads = threads)
    means = list()
    for (pos, p) in enumerate(retained):
        row = { 'index': p.to_json() }
        row.update(_zrow(estimate, pos))
        means.append(row)
    products = list()
    brackets = list()
    for (num, (a, b)) in enumerate(pairs):
        label = [retained[a].to_json(), retained[b].to_json()]
        row = { 'pair': label }
        row.update(_zrow(estimate, size + num))
        products.append(row)
        row = { 'pair': label }
        row.update(_zrow(estimate, size + len(pairs) + num))
        brackets.append(row)

    report = { 'kind':     'orth',
               'means':    means,
               'products': products,
               'brackets': brackets,
               'n':        estimate.count,
               'seed':     seed }
    report.update(_summary(means + products + brackets))
    levychaos.log.logger.info('Orthogonality check: max |z| = {z:.3f}',
                              z = report['max_abs_z'])
    return report
