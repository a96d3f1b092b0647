# -*- coding: utf-8 -*-
"""
Package for chaos expansions of products of Levy increments.

For Z(s) = X(t0 + s) - X(t0), Ito's formula with
joint power jumps gives

    Z^k(t) = sum over 0 != l <= k of C(k, l) int_0^t Z^(k-l)(s-)
                                          [dY^l(s) + m_l ds]
           + sum_i  Sigma_ii k_i (k_i - 1) / 2 int_0^t Z^(k-2e_i)(s) ds
           + sum_i<j Sigma_ij k_i k_j       int_0^t Z^(k-e_i-e_j)(s) ds

with C(k, l) the product of binomials C(k_i, l_i).
Applied recursively, and with each time integral of
an iterated integral moved inside by stochastic
Fubini, this yields

    Z^k(t) = f(t) + sum over (p_1, ..., p_m) of
             int h(t, t_1, .., t_m) dY^p_m(t_m) .. dY^p_1(t_1)

over t0 < t_m < ... < t_1 <= t0 + t. Coefficients
are kept as exact rationals throughout.

"""


import collections
import math

import sympy

import levychaos.chaos.poly
import levychaos.log
import levychaos.multiindex
import levychaos.util.serialization

from levychaos.exception import CapabilityError
from levychaos.exception import CoverageError
from levychaos.exception import DimensionError
from levychaos.exception import ParameterError


K_MAX = 3


# =============================================================================
class ChaosTerm():
    """
    One iterated integral: integrators p_1 (outermost) .. p_m and integrand.

    The integrand is a sympy expression in the
    window length t and the absolute integration
    times t_1 .. t_m.

    """

    # -------------------------------------------------------------------------
    def __init__(self, integrators, integrand):
        """
        Return a ChaosTerm instance.

        """
        self.integrators = tuple(levychaos.multiindex.MultiIndex.label(p)
                                 for p in integrators)
        self.integrand   = sympy.expand(integrand)
        self._monomials  = dict()

    # -------------------------------------------------------------------------
    @property
    def m(self):
        """
        Return the number of nested integrals.

        """
        return len(self.integrators)

    # -------------------------------------------------------------------------
    def degree(self):
        """
        Return the total degree of the integrand.

        """
        return levychaos.chaos.poly.total_degree(self.integrand, self.m)

    # -------------------------------------------------------------------------
    def monomials(self, t):
        """
        Return the integrand as float monomials in t_1..t_m at window t.

        """
        key = float(t)
        if key not in self._monomials:
            self._monomials[key] = levychaos.chaos.poly.numeric_monomials(
                                                self.integrand, self.m, key)
        return self._monomials[key]

    # -------------------------------------------------------------------------
    def signature(self):
        """
        Return a hashable key identifying the term exactly.

        """
        return (self.integrators,
                tuple(sorted(levychaos.chaos.poly.to_sparse(
                                        self.integrand, self.m).items())))

    # -------------------------------------------------------------------------
    def to_dict(self):
        """
        Return the term as a JSON compatible dict.

        """
        return { 'integrators': [p.to_json() for p in self.integrators],
                 'integrand':   levychaos.chaos.poly.to_json(self.integrand,
                                                             self.m) }

    # -------------------------------------------------------------------------
    @classmethod
    def from_dict(cls, doc):
        """
        Return a ChaosTerm from its JSON form.

        """
        m = len(doc['integrators'])
        return cls(doc['integrators'],
                   levychaos.chaos.poly.from_json(doc['integrand'], m))

    # -------------------------------------------------------------------------
    def __repr__(self):
        """
        Return a short description.

        """
        return 'ChaosTerm({seq}, {h})'.format(
                            seq = [list(p) for p in self.integrators],
                            h   = self.integrand)


# =============================================================================
class ChaosExpansion():
    """
    Chaos expansion of prod_i (X_i(t0 + t) - X_i(t0))^k_i.

    basis is None when the integrators are Teugels
    martingales Y^p, and 'H' when they label the
    orthogonalized martingales of a MartingaleBasis
    with the stored fingerprint.

    """

    # -------------------------------------------------------------------------
    def __init__(self, k, f, terms, anchor = 0, basis = None,
                 fingerprint = None):
        """
        Return a ChaosExpansion instance.

        """
        self.k           = levychaos.multiindex.MultiIndex.label(k)
        self.f           = sympy.expand(f)
        self.terms       = tuple(terms)
        self.anchor      = levychaos.chaos.poly.exact(anchor)
        self.basis       = basis
        self.fingerprint = fingerprint
        self._f_float    = None

    # -------------------------------------------------------------------------
    def f_coefficients(self):
        """
        Return the exact coefficients of f as {power of t: coefficient}.

        """
        return { exps[0]: coef for (exps, coef)
                 in levychaos.chaos.poly.to_sparse(self.f, 0).items() }

    # -------------------------------------------------------------------------
    def moment_value(self, t):
        """
        Return f(t) as a float.

        """
        if self._f_float is None:
            self._f_float = sorted(
                (power, float(coef))
                for (power, coef) in self.f_coefficients().items())
        return math.fsum(coef * float(t) ** power
                         for (power, coef) in self._f_float)

    # -------------------------------------------------------------------------
    def integrator_sequences(self):
        """
        Return the integrator sequences of the terms, in term order.

        """
        return [term.integrators for term in self.terms]

    # -------------------------------------------------------------------------
    def to_dict(self):
        """
        Return the expansion as a JSON compatible dict.

        """
        return { 'k':           self.k.to_json(),
                 'anchor':      levychaos.chaos.poly.coef_to_json(self.anchor),
                 'basis':       self.basis,
                 'fingerprint': self.fingerprint,
                 'f':           levychaos.chaos.poly.to_json(self.f, 0),
                 'terms':       [term.to_dict() for term in self.terms] }

    # -------------------------------------------------------------------------
    @classmethod
    def from_dict(cls, doc):
        """
        Return a ChaosExpansion from its JSON form.

        """
        return cls(k           = doc['k'],
                   f           = levychaos.chaos.poly.from_json(doc['f'], 0),
                   terms       = [ChaosTerm.from_dict(term)
                                  for term in doc['terms']],
                   anchor      = levychaos.chaos.poly.coef_from_json(
                                                            doc['anchor']),
                   basis       = doc.get('basis'),
                   fingerprint = doc.get('fingerprint'))


# -----------------------------------------------------------------------------
def _sequence_key(sequence):
    """
    Return the sort key of an integrator sequence.

    """
    return (len(sequence),
            tuple(levychaos.multiindex.grlex_key(p) for p in sequence))


# -----------------------------------------------------------------------------
def _binomial(k, l):
    """
    Return prod_i C(k_i, l_i).

    """
    return math.prod(math.comb(a, b) for (a, b) in zip(k, l))


# -----------------------------------------------------------------------------
def _sub_indices(k):
    """
    Return every nonzero l <= k componentwise, in grlex order.

    """
    result = list()
    for degree in range(1, k.degree + 1):
        for index in levychaos.multiindex.enumerate_degree(k.n, degree):
            if index.dominated_by(k):
                result.append(index)
    return result


# =============================================================================
class _Recursion():
    """
    Memoized evaluation of the increment power recursion in relative time.

    Each expansion is a dict mapping an integrator
    sequence (() for the deterministic part) to its
    exact integrand.

    """

    # -------------------------------------------------------------------------
    def __init__(self, n, moments, sigma):
        """
        Return a _Recursion over exact moments and covariance entries.

        """
        self.n       = n
        self.moments = moments
        self.sigma   = sigma
        self.cache   = dict()

    # -------------------------------------------------------------------------
    def expand(self, k):
        """
        Return the relative-time expansion of Z^k.

        """
        k = levychaos.multiindex.MultiIndex(k)
        if k not in self.cache:
            self.cache[k] = self._compute(k)
        return self.cache[k]

    # -------------------------------------------------------------------------
    def _compute(self, k):
        """
        Return the expansion of Z^k from those of lower powers.

        """
        if k.degree == 0:
            return { (): sympy.Integer(1) }

        result = collections.defaultdict(lambda: sympy.Integer(0))
        for l in _sub_indices(k):
            coef = _binomial(k, l)
            rate = self.moments[l]
            for (seq, expr) in self.expand(k - l).items():
                m = len(seq)
                result[(l,) + seq] += coef * levychaos.chaos.poly.push_inside(
                                                                    expr, m)
                if rate != 0:
                    result[seq] += (coef * rate
                                    * levychaos.chaos.poly.integrate_time(
                                                                    expr, m))

        for i in range(self.n):
            for j in range(i, self.n):
                sigma = self.sigma[i][j]
                if sigma == 0:
                    continue
                if i == j:
                    if k[i] < 2:
                        continue
                    coef  = sympy.Rational(k[i] * (k[i] - 1), 2) * sigma
                    lower = _minus(k, i, i)
                else:
                    if k[i] < 1 or k[j] < 1:
                        continue
                    coef  = k[i] * k[j] * sigma
                    lower = _minus(k, i, j)
                for (seq, expr) in self.expand(lower).items():
                    result[seq] += coef * levychaos.chaos.poly.integrate_time(
                                                                expr, len(seq))

        expanded = { seq: sympy.expand(expr) for (seq, expr) in result.items() }
        return { seq: expr for (seq, expr) in expanded.items() if expr != 0 }


# -----------------------------------------------------------------------------
def _minus(k, i, j):
    """
    Return k - e_i - e_j.

    """
    lower = list(k)
    lower[i] -= 1
    lower[j] -= 1
    return levychaos.multiindex.MultiIndex(lower)


# -----------------------------------------------------------------------------
def _exact_sigma(sigma, n):
    """
    Return the covariance entries as exact numbers.

    """
    if sigma is None:
        return [[sympy.Integer(0)] * n for _ in range(n)]
    return [[levychaos.chaos.poly.exact(float(sigma[i][j])) for j in range(n)]
            for i in range(n)]


# -----------------------------------------------------------------------------
def expand_increment_product(model, table, k, anchor = 0, k_max = K_MAX):
    """
    Return the ChaosExpansion of prod_i (X_i(anchor + t) - X_i(anchor))^k_i.

    The integrators are Teugels martingales. Time
    variables of the integrands are absolute; the
    constant term f(t) does not depend on the anchor.

    """
    k = levychaos.multiindex.MultiIndex.label(k)
    if k.n != model.n or k.n != table.n:
        raise DimensionError('k, model and table dimensions differ.')
    if k.degree > k_max:
        raise CapabilityError(
            'Expansions are limited to |k| <= {kmax}, got {deg}.'.format(
                                                kmax = k_max, deg = k.degree))
    if not anchor >= 0:
        raise ParameterError('The anchor time must be nonnegative.')

    moments = dict()
    for l in _sub_indices(k):
        if not table.covers(l):
            raise CoverageError('The moment table does not cover {l}.'.format(
                                                                l = list(l)))
        moments[l] = levychaos.chaos.poly.exact(table[l])
    recursion = _Recursion(k.n, moments, _exact_sigma(model.sigma, k.n))
    relative  = recursion.expand(k)

    terms = list()
    for seq in sorted((seq for seq in relative if seq),
                      key = _sequence_key):
        integrand = levychaos.chaos.poly.shift_anchor(relative[seq],
                                                      len(seq), anchor)
        terms.append(ChaosTerm(seq, integrand))
    expansion = ChaosExpansion(k           = k,
                               f           = relative.get((), 0),
                               terms       = terms,
                               anchor      = anchor,
                               fingerprint = table.fingerprint)
    levychaos.log.logger.debug('Expansion of {k}: {num} terms',
                               k = list(k), num = len(terms))
    return expansion


# -----------------------------------------------------------------------------
def moment_function(expansion, t):
    """
    Return f(t) = E[prod_i (X_i(t0 + t) - X_i(t0))^k_i].

    """
    return expansion.moment_value(t)


# -----------------------------------------------------------------------------
def degree_violations(expansion):
    """
    Return the terms with deg(h) + sum |p_j| > |k|, with their totals.

    """
    result = list()
    for term in expansion.terms:
        total = term.degree() + sum(p.degree for p in term.integrators)
        if total > expansion.k.degree:
            result.append((term, total))
    if levychaos.chaos.poly.total_degree(expansion.f, 0) > expansion.k.degree:
        result.append((None, levychaos.chaos.poly.total_degree(expansion.f, 0)))
    return result


# -----------------------------------------------------------------------------
def to_basis(expansion, basis):
    """
    Return the expansion rewritten with the orthogonalized martingales H.

    Each Teugels integrator Y^q is replaced by
    sum_r L[q, r] H^r using the basis loadings;
    terms with the same H sequence are merged.

    """
    if expansion.basis is not None:
        raise ParameterError('The expansion is already in the H basis.')
    basis.check_fingerprint(expansion.fingerprint)
    rows = dict()
    for term in expansion.terms:
        for p in term.integrators:
            if p not in rows:
                if p not in basis.indices:
                    raise CoverageError(
                        'The basis does not cover integrator {p}.'.format(
                                                                p = list(p)))
                loading = basis.loadings[basis.column(p)]
                rows[p] = [(basis.retained[r], float(loading[r]))
                           for r in range(len(basis.retained))
                           if loading[r] != 0.0]

    merged = collections.defaultdict(lambda: sympy.Integer(0))
    for term in expansion.terms:
        combos = [((), 1.0)]
        for p in term.integrators:
            combos = [(seq + (label,), weight * value)
                      for (seq, weight) in combos
                      for (label, value) in rows[p]]
        for (seq, weight) in combos:
            merged[seq] += sympy.Float(weight) * term.integrand

    terms = list()
    for seq in sorted(merged, key = _sequence_key):
        integrand = sympy.expand(merged[seq])
        if integrand != 0:
            terms.append(ChaosTerm(seq, integrand))
    return ChaosExpansion(k           = expansion.k,
                          f           = expansion.f,
                          terms       = terms,
                          anchor      = expansion.anchor,
                          basis       = 'H',
                          fingerprint = basis.fingerprint)


# -----------------------------------------------------------------------------
def write_json(expansion, filepath):
    """
    Write the expansion as JSON.

    """
    levychaos.util.serialization.write_json(filepath, expansion.to_dict())
