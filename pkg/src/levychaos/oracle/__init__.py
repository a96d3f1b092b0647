# -*- coding: utf-8 -*-
"""
Brute force reference computations for cross checking.

Nothing here shares arithmetic with the modules it
checks: moments are plain loops over atoms, the
basis comes from solving the normal equations of
each projection, and iterated integrals are double
loops over ordered jump pairs.

"""


import numpy


# -----------------------------------------------------------------------------
def atom_sum_moment(atoms, p):
    """
    Return sum_j r_j x_j^p for atoms given as (x, r) pairs.

    """
    total = 0.0
    for (x, rate) in atoms:
        term = rate
        for (x_i, p_i) in zip(x, p):
            term *= x_i ** p_i
        total += term
    return total


# -----------------------------------------------------------------------------
def dense_gram_orthogonalize(gram, drop_tol = None):
    """
    Return (coefficients, norms, dropped positions) by direct elimination.

    Candidate k is projected on the span of the
    candidates retained before it by solving the
    normal equations on that sub-block.

    """
    gram = numpy.asarray(gram, dtype = float)
    size = gram.shape[0]
    if drop_tol is None:
        drop_tol = max(1e-10 * float(numpy.max(numpy.diag(gram), initial = 0.0)),
                       1e-14)
    kept         = list()
    coefficients = list()
    norms        = list()
    dropped      = list()
    for k in range(size):
        row = numpy.zeros(size)
        row[k] = 1.0
        if kept:
            block = gram[numpy.ix_(kept, kept)]
            rhs   = gram[kept, k]
            proj  = numpy.linalg.solve(block, rhs)
            row[kept] = -proj
            residual = gram[k, k] - float(rhs @ proj)
        else:
            residual = gram[k, k]
        if residual <= drop_tol:
            dropped.append(k)
            continue
        kept.append(k)
        coefficients.append(row)
        norms.append(residual)
    if not coefficients:
        return (numpy.zeros((0, size)), norms, dropped)
    return (numpy.array(coefficients), norms, dropped)


# -----------------------------------------------------------------------------
def pathwise_double_sum(path, p, q):
    """
    Return sum over jump pairs s2 < s1 of dX(s1)^p dX(s2)^q.

    p is the outer (later) integrator and q the inner one.

    """
    total = 0.0
    for (idx_outer, jump_outer) in enumerate(path.jumps):
        outer = 1.0
        for (x_i, p_i) in zip(jump_outer, p):
            outer *= x_i ** p_i
        for idx_inner in range(idx_outer):
            inner = 1.0
            for (x_i, q_i) in zip(path.jumps[idx_inner], q):
                inner *= x_i ** q_i
            total += outer * inner
    return total
