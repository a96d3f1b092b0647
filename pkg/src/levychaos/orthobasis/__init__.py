# -*- coding: utf-8 -*-
"""
Package for the strongly orthogonal martingale basis {H^p}.

The scalar product of two Teugels martingales is

    <Y^p, Y^q> = E([Y^p, Y^q](1)) = m_{p+q} + Sigma_ij 1{p = e_i, q = e_j}

which coincides with the scalar product of the
polynomials x^(p-1), x^(q-1) in the space of the
Levy measure. Orthogonalization therefore only
needs the Gram matrix, whichever space it is read in.

The basis is made unique by processing indices in
graded lexicographical order, by giving each H^p a
unit leading coefficient and by using modified
Gram-Schmidt in the Gram geometry.

"""


import math

import numpy

import levychaos.exception
import levychaos.log
import levychaos.multiindex
import levychaos.util.serialization

from levychaos.exception import ConfigurationError
from levychaos.exception import DimensionError
from levychaos.exception import NumericError


TOL_REL_DROP   = 1e-10
TOL_ABS_DROP   = 1e-14
TOL_SYMMETRY   = 1e-10
COND_REORTHO   = 1e8


# -----------------------------------------------------------------------------
def inner_product(table, sigma, p, q):
    """
    Return <Y^p, Y^q> from the moment table and the covariance matrix.

    """
    p = levychaos.multiindex.MultiIndex.label(p)
    q = levychaos.multiindex.MultiIndex.label(q)
    if p.n != table.n or q.n != table.n:
        raise DimensionError('Index dimension does not match the table.')
    value = table[p + q]
    (i, j) = (p.unit_coordinate, q.unit_coordinate)
    if i is not None and j is not None:
        value += float(sigma[i][j])
    return value


# -----------------------------------------------------------------------------
def gram_matrix(table, sigma, d_max):
    """
    Return (gram, indices) over all 1 <= |p| <= d_max in grlex order.

    The upper triangle is computed and mirrored,
    so the result is exactly symmetric.

    """
    indices = levychaos.multiindex.enumerate_upto(table.n, d_max)
    size    = len(indices)
    gram    = numpy.zeros((size, size))
    for row in range(size):
        for col in range(row, size):
            value = inner_product(table, sigma, indices[row], indices[col])
            gram[row, col] = value
            gram[col, row] = value
    return (gram, indices)


# =============================================================================
class MartingaleBasis():
    """
    Coefficients of the orthogonal martingales H^p in the Teugels basis Y^q.

    Attributes:

        indices       All candidate indices (the Y columns), grlex order.
        retained      Indices with a basis element, grlex order.
        dropped       Indices whose residual norm fell below drop_tol.
        coefficients  Matrix C, one row per retained H, one column per Y.
        norms         Squared norms <H^p, H^p> of the retained elements.
        loadings      Matrix L, one row per Y, one column per retained H,
                      with Y = L H (exact for retained rows, up to a
                      null martingale for dropped ones).
        fingerprint   Fingerprint of the model the Gram matrix came from.

    """

    # -------------------------------------------------------------------------
    def __init__(self,  # pylint: disable=R0913
                 indices,
                 retained,
                 dropped,
                 coefficients,
                 norms,
                 loadings,
                 drop_tol,
                 fingerprint     = None,
                 reorthogonalized = False):
        """
        Return a MartingaleBasis instance.

        """
        self.indices          = [levychaos.multiindex.MultiIndex(p)
                                 for p in indices]
        self.retained         = [levychaos.multiindex.MultiIndex(p)
                                 for p in retained]
        self.dropped          = [levychaos.multiindex.MultiIndex(p)
                                 for p in dropped]
        self.coefficients     = numpy.array(coefficients, dtype = float)
        self.norms            = [float(value) for value in norms]
        self.loadings         = numpy.array(loadings, dtype = float)
        self.drop_tol         = float(drop_tol)
        self.fingerprint      = fingerprint
        self.reorthogonalized = bool(reorthogonalized)
        self.coefficients.setflags(write = False)
        self.loadings.setflags(write = False)

    # -------------------------------------------------------------------------
    @property
    def n(self):
        """
        Return the process dimension.

        """
        return self.indices[0].n

    # -------------------------------------------------------------------------
    def column(self, p):
        """
        Return the column position of the Teugels index p.

        """
        return self.indices.index(tuple(p))

    # -------------------------------------------------------------------------
    def check_fingerprint(self, fingerprint):
        """
        Raise ConfigurationError if the basis came from a different model.

        """
        if self.fingerprint is None or fingerprint is None:
            return
        if self.fingerprint != fingerprint:
            raise ConfigurationError(
                'Basis fingerprint {fb} does not match {fo}.'.format(
                                    fb = self.fingerprint, fo = fingerprint))

    # -------------------------------------------------------------------------
    def to_dict(self):
        """
        Return the basis as a JSON compatible dict.

        """
        return { 'indices':          [p.to_json() for p in self.indices],
                 'retained':         [p.to_json() for p in self.retained],
                 'dropped':          [p.to_json() for p in self.dropped],
                 'coefficients':     self.coefficients.tolist(),
                 'norms':            list(self.norms),
                 'loadings':         self.loadings.tolist(),
                 'drop_tol':         self.drop_tol,
                 'fingerprint':      self.fingerprint,
                 'reorthogonalized': self.reorthogonalized }

    # -------------------------------------------------------------------------
    @classmethod
    def from_dict(cls, doc):
        """
        Return a MartingaleBasis from its JSON form.

        """
        return cls(indices          = doc['indices'],
                   retained         = doc['retained'],
                   dropped          = doc['dropped'],
                   coefficients     = doc['coefficients'],
                   norms            = doc['norms'],
                   loadings         = doc['loadings'],
                   drop_tol         = doc['drop_tol'],
                   fingerprint      = doc.get('fingerprint'),
                   reorthogonalized = doc.get('reorthogonalized', False))

    # -------------------------------------------------------------------------
    def csv_rows(self):
        """
        Return (header, rows) of the coefficient matrix for CSV export.

        """
        header = ['index'] + [levychaos.util.serialization.canonical_json(
                                            p.to_json()) for p in self.indices]
        rows   = [[p.to_json()] + list(row)
                  for (p, row) in zip(self.retained, self.coefficients)]
        return (header, rows)


# -----------------------------------------------------------------------------
def default_drop_tol(gram):
    """
    Return 1e-10 times the largest Gram diagonal, floored at 1e-14.

    """
    if gram.size == 0:
        return TOL_ABS_DROP
    return max(TOL_REL_DROP * float(numpy.max(numpy.diag(gram))),
               TOL_ABS_DROP)


# -----------------------------------------------------------------------------
def orthogonalize(gram,  # pylint: disable=R0914
                  indices,
                  drop_tol        = None,
                  reorthogonalize = None,
                  fingerprint     = None):
    """
    Return the MartingaleBasis from modified Gram-Schmidt on the Gram matrix.

    reorthogonalize selects a second projection
    sweep: True always, False never, None only when
    the condition estimate of the Gram matrix
    exceeds 1e8.

    """
    gram = numpy.asarray(gram, dtype = float)
    size = len(indices)
    if gram.shape != (size, size):
        raise DimensionError('Gram matrix and index list sizes differ.')
    asym = float(numpy.max(numpy.abs(gram - gram.T))) if size else 0.0
    if asym > TOL_SYMMETRY * max(1.0, float(numpy.max(numpy.abs(gram)))):
        raise NumericError('Gram matrix is not symmetric.', residual = asym)
    if drop_tol is None:
        drop_tol = default_drop_tol(gram)
    if not drop_tol > 0:
        raise levychaos.exception.ParameterError('drop_tol must be positive.')

    if reorthogonalize is None:
        cond = numpy.linalg.cond(gram) if size else 1.0
        reorthogonalize = not cond <= COND_REORTHO
        if reorthogonalize:
            levychaos.log.logger.debug(
                'Gram condition estimate {cond:.3g}: second sweep enabled',
                cond = cond)
    num_sweeps = 2 if reorthogonalize else 1

    basis_vec = []     # G-orthogonal coefficient vectors h_j
    basis_gh  = []     # G h_j, cached
    norms     = []
    retained  = []
    dropped   = []
    loadings  = numpy.zeros((size, size))

    for k in range(size):
        vec = numpy.zeros(size)
        vec[k] = 1.0
        for _ in range(num_sweeps):
            for (j, (h_j, gh_j)) in enumerate(zip(basis_vec, basis_gh)):
                proj = float(vec @ gh_j) / norms[j]
                if proj != 0.0:
                    vec[:k] -= proj * h_j[:k]
                    loadings[k, j] += proj
        norm = float(vec @ gram @ vec)
        if norm < -drop_tol:
            raise NumericError(
                'Gram matrix is indefinite at index {p}: residual '
                '{res:.3g}.'.format(p = list(indices[k]), res = norm),
                residual = norm)
        if norm <= drop_tol:
            dropped.append(indices[k])
            levychaos.log.logger.debug('Dropped {p}: residual {res:.3g}',
                                       p = list(indices[k]), res = norm)
            continue
        vec[k] = 1.0
        loadings[k, len(basis_vec)] = 1.0
        basis_vec.append(vec)
        basis_gh.append(gram @ vec)
        norms.append(norm)
        retained.append(indices[k])

    coefficients = (numpy.array(basis_vec) if basis_vec
                    else numpy.zeros((0, size)))
    return MartingaleBasis(indices          = indices,
                           retained         = retained,
                           dropped          = dropped,
                           coefficients     = coefficients,
                           norms            = norms,
                           loadings         = loadings[:, :len(basis_vec)],
                           drop_tol         = drop_tol,
                           fingerprint      = fingerprint,
                           reorthogonalized = reorthogonalize)


# -----------------------------------------------------------------------------
def build(table, d_max, drop_tol = None, reorthogonalize = None):
    """
    Return (basis, gram) for a moment table and maximum degree.

    """
    if table.sigma is None:
        raise ConfigurationError('The moment table carries no covariance.')
    (gram, indices) = gram_matrix(table, table.sigma, d_max)
    basis = orthogonalize(gram, indices,
                          drop_tol        = drop_tol,
                          reorthogonalize = reorthogonalize,
                          fingerprint     = table.fingerprint)
    levychaos.log.logger.info('Basis: {nr} retained, {nd} dropped',
                              nr = len(basis.retained),
                              nd = len(basis.dropped))
    return (basis, gram)


# -----------------------------------------------------------------------------
def certificate(basis, gram):
    """
    Return a dict certifying orthogonality, triangularity and unit diagonal.

    """
    coef    = basis.coefficients
    product = coef @ gram @ coef.T if coef.size else numpy.zeros((0, 0))
    size    = product.shape[0]
    off     = product - numpy.diag(numpy.diag(product))
    max_off = float(numpy.max(numpy.abs(off))) if size else 0.0
    max_dia = float(numpy.max(numpy.diag(product))) if size else 0.0

    cols       = [basis.column(p) for p in basis.retained]
    unit_diag  = all(coef[row, col] == 1.0 for (row, col) in enumerate(cols))
    triangular = all(not numpy.any(coef[row, col + 1:])
                     for (row, col) in enumerate(cols))
    ratio = max_off / max_dia if max_dia > 0 else (0.0 if max_off == 0 else
                                                   math.inf)
    return { 'max_offdiag':    max_off,
             'max_diag':       max_dia,
             'ratio':          ratio,
             'unit_diagonal':  unit_diag,
             'triangular':     triangular,
             'retained':       len(basis.retained),
             'dropped':        len(basis.dropped) }


# -----------------------------------------------------------------------------
def write_json(basis, filepath):
    """
    Write the basis as JSON.

    """
    levychaos.util.serialization.write_json(filepath, basis.to_dict())


# -----------------------------------------------------------------------------
def write_csv(basis, filepath):
    """
    Write the coefficient matrix as CSV.

    """
    (header, rows) = basis.csv_rows()
    levychaos.util.serialization.write_csv(filepath, header, rows)
