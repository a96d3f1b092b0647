# -*- coding: utf-8 -*-
"""
Package for the moment functionals m_p of a Levy model.

Conventions stored in a MomentTable:

    |p| >= 2   m_p = integral of x^p nu(dx), the pure jump moment
               of the (truncated) Levy measure.

    p = e_i    m_p = a_i + integral of x_i nu(dx) = E[X_i(1)],
               the expectation rate under the bounded variation
               drift convention. With compensate_truncation the
               small jump mean is part of a_i.

These are exactly the compensator rates of the
Teugels martingales Y^p(t) = X^p(t) - m_p t, with
the convention that X^(e_i) is the full coordinate
process X_i.

"""


import types

import levychaos.exception
import levychaos.log
import levychaos.model.jumps
import levychaos.multiindex
import levychaos.util.serialization

from levychaos.exception import CoverageError
from levychaos.exception import LevyChaosError
from levychaos.exception import NumericError
from levychaos.exception import ParameterError


CSV_HEADER = ('index', 'value', 'method', 'error_bound')


# =============================================================================
class MomentTable():
    """
    Immutable map from multi-index to moment value, method and error bound.

    """

    # -------------------------------------------------------------------------
    def __init__(self, n, entries, fingerprint, sigma = None):
        """
        Return a MomentTable over the specified entries.

        entries maps multi-index tuples to MomentValue
        objects. sigma is the covariance of the model
        the table was built from, kept so that Gram
        assembly does not need the model itself.

        """
        self.n           = int(n)
        self.fingerprint = fingerprint
        self.sigma       = sigma
        mapping = dict()
        for (index, entry) in entries.items():
            index = levychaos.multiindex.MultiIndex.label(index)
            if index.n != self.n:
                raise levychaos.exception.DimensionError(
                    'Table entry {p} has the wrong dimension.'.format(
                                                            p = tuple(index)))
            mapping[index] = entry
        self._entries = types.MappingProxyType(mapping)

    # -------------------------------------------------------------------------
    @classmethod
    def synthetic(cls, n, values, fingerprint = 'synthetic', sigma = None):
        """
        Return a table from plain values, e.g. to switch compensators off.

        """
        return cls(n, { index: levychaos.model.jumps.MomentValue(
                                        value, 'synthetic', 0.0)
                        for (index, value) in values.items() },
                   fingerprint = fingerprint,
                   sigma       = sigma)

    # -------------------------------------------------------------------------
    @property
    def max_order(self):
        """
        Return the largest total degree d such that every |p| <= d is present.

        """
        degree = 0
        while all(index in self._entries
                  for index in levychaos.multiindex.enumerate_degree(
                                                        self.n, degree + 1)):
            degree += 1
        return degree

    # -------------------------------------------------------------------------
    def covers(self, p):
        """
        Return True iff the table holds an entry for p.

        """
        return tuple(p) in self._entries

    # -------------------------------------------------------------------------
    def entry(self, p):
        """
        Return the MomentValue stored for p.

        """
        try:
            return self._entries[tuple(p)]
        except KeyError:
            raise CoverageError(
                'Moment table does not cover index {p}.'.format(
                                                    p = list(p))) from None

    # -------------------------------------------------------------------------
    def __getitem__(self, p):
        """
        Return the value m_p.

        """
        return self.entry(p).value

    # -------------------------------------------------------------------------
    def __len__(self):
        """
        Return the number of entries.

        """
        return len(self._entries)

    # -------------------------------------------------------------------------
    def indices(self):
        """
        Return the covered indices in graded lexicographical order.

        """
        return sorted(self._entries, key = levychaos.multiindex.grlex_key)

    # -------------------------------------------------------------------------
    def rows(self):
        """
        Return CSV rows (index, value, method, error bound).

        """
        return [(index.to_json(),
                 self._entries[index].value,
                 self._entries[index].method,
                 self._entries[index].error_bound)
                for index in self.indices()]

    # -------------------------------------------------------------------------
    def to_csv(self):
        """
        Return the table as CSV text.

        """
        return levychaos.util.serialization.to_csv(CSV_HEADER, self.rows())


# -----------------------------------------------------------------------------
def moment(model, p):
    """
    Return the MomentValue of m_p for the specified model.

    """
    p = levychaos.multiindex.MultiIndex(p)
    if p.n != model.n:
        raise levychaos.exception.DimensionError(
            'Index {p} does not match model dimension {n}.'.format(
                                                    p = list(p), n = model.n))
    if p.degree == 0:
        raise ParameterError('The zero index has no moment functional.')
    entry = model.jumps.moment(p, model.eps)
    coord = p.unit_coordinate
    if coord is None:
        return entry
    drift = model.effective_drift[coord]
    return levychaos.model.jumps.MomentValue(
                    value       = drift + entry.value,
                    method      = entry.method,
                    error_bound = entry.error_bound,
                    meta        = entry.meta)


# -----------------------------------------------------------------------------
def moment_table(model, max_degree):
    """
    Return the MomentTable of all 1 <= |p| <= 2 max_degree.

    """
    if isinstance(max_degree, bool) or int(max_degree) != max_degree \
            or max_degree < 1:
        raise ParameterError('max_degree must be a positive integer.')
    entries = dict()
    for p in levychaos.multiindex.enumerate_upto(model.n, 2 * max_degree):
        try:
            entries[p] = moment(model, p)
        except NumericError as err:
            raise NumericError('m_{p}: {msg}'.format(p = list(p), msg = err),
                               residual = err.residual) from err
        except LevyChaosError as err:
            raise type(err)('m_{p}: {msg}'.format(p   = list(p),
                                                  msg = err)) from err
        levychaos.log.logger.debug('m_{p} = {val} ({method}, +- {err})',
                                   p      = list(p),
                                   val    = entries[p].value,
                                   method = entries[p].method,
                                   err    = entries[p].error_bound)
    levychaos.log.logger.info('Moment table with {num} entries up to degree '
                              '{deg}', num = len(entries),
                              deg = 2 * max_degree)
    return MomentTable(model.n, entries,
                       fingerprint = model.fingerprint,
                       sigma       = model.sigma.copy())


# -----------------------------------------------------------------------------
def write_csv(table, filepath):
    """
    Write the moment table as CSV to the specified path.

    """
    levychaos.util.serialization.write_csv(filepath, CSV_HEADER, table.rows())
