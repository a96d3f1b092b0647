# -*- coding: utf-8 -*-
"""
Package of multi-index arithmetic and the graded lexicographical order.

A multi-index p = (p_1, ..., p_n) labels the power
jump process X^p, the Teugels martingale Y^p and
the orthogonalized martingale H^p of an
n-dimensional Levy process.

Within a fixed total degree, the index with the
larger first differing component is ranked
earlier, so that the degree 2 indices in two
dimensions are listed as (2,0), (1,1), (0,2).

"""


import enum
import functools
import math

from levychaos.exception import DimensionError, ParameterError


MAX_COMPONENT = 2 ** 31 - 1


# =============================================================================
class Ordering(enum.IntEnum):
    """
    Result of a graded lexicographical comparison.

    """

    LESS    = -1
    EQUAL   = 0
    GREATER = 1


# =============================================================================
class MultiIndex(tuple):
    """
    Immutable exponent vector p with nonnegative integer components.

    The zero index is permitted as an
    intermediate value in index arithmetic, but
    is rejected wherever a martingale label is
    required (see MultiIndex.label).

    """

    # -------------------------------------------------------------------------
    def __new__(cls, components):
        """
        Return a MultiIndex with the specified components.

        """
        components = tuple(components)
        if len(components) < 1:
            raise DimensionError('A multi-index needs at least one component.')
        for value in components:
            try:
                is_integer = (not isinstance(value, bool)
                              and int(value) == value)
            except (TypeError, ValueError, OverflowError):
                is_integer = False
            if not is_integer:
                raise ParameterError(
                    'Multi-index components must be integers: {val!r}'.format(
                                                                val = value))
            if value < 0:
                raise ParameterError(
                    'Multi-index components must be nonnegative: {val}'.format(
                                                                val = value))
            if value > MAX_COMPONENT:
                raise ParameterError('Multi-index component overflow.')
        return super().__new__(cls, (int(value) for value in components))

    # -------------------------------------------------------------------------
    @classmethod
    def label(cls, components):
        """
        Return a MultiIndex usable as a martingale label (|p| >= 1).

        """
        index = cls(components)
        if index.degree < 1:
            raise ParameterError(
                'The zero multi-index does not label a martingale.')
        return index

    # -------------------------------------------------------------------------
    @classmethod
    def unit(cls, n, i):
        """
        Return the unit multi-index e_i of dimension n (i is zero based).

        """
        if not 0 <= i < n:
            raise DimensionError(
                'Unit index {i} out of range for dimension {n}.'.format(
                                                                i = i, n = n))
        return cls(1 if j == i else 0 for j in range(n))

    # -------------------------------------------------------------------------
    @classmethod
    def zero(cls, n):
        """
        Return the zero multi-index of dimension n.

        """
        return cls((0,) * n)

    # -------------------------------------------------------------------------
    @property
    def n(self):
        """
        Return the dimension of the multi-index.

        """
        return len(self)

    # -------------------------------------------------------------------------
    @property
    def degree(self):
        """
        Return the total degree |p|.

        """
        return sum(self)

    # -------------------------------------------------------------------------
    @property
    def factorial(self):
        """
        Return p! = p_1! ... p_n!.

        """
        return math.prod(math.factorial(value) for value in self)

    # -------------------------------------------------------------------------
    @property
    def unit_coordinate(self):
        """
        Return i if this index is e_i, otherwise None.

        """
        if self.degree != 1:
            return None
        return self.index(1)

    # -------------------------------------------------------------------------
    def __add__(self, other):
        """
        Return the componentwise sum p + q.

        """
        _check_same_dimension(self, other)
        return MultiIndex(a + b for (a, b) in zip(self, other))

    # -------------------------------------------------------------------------
    def __sub__(self, other):
        """
        Return the componentwise difference p - q (requires q <= p).

        """
        _check_same_dimension(self, other)
        return MultiIndex(a - b for (a, b) in zip(self, other))

    # -------------------------------------------------------------------------
    def __mul__(self, other):
        """
        Disable tuple repetition.

        """
        return NotImplemented

    __rmul__ = __mul__

    # -------------------------------------------------------------------------
    def dominated_by(self, other):
        """
        Return True iff p_i <= q_i for every coordinate.

        """
        _check_same_dimension(self, other)
        return all(a <= b for (a, b) in zip(self, other))

    # -------------------------------------------------------------------------
    def power(self, vector):
        """
        Return the monomial x^p evaluated at the specified vector.

        """
        if len(vector) != len(self):
            raise DimensionError('Vector and multi-index dimensions differ.')
        return math.prod(x ** p for (x, p) in zip(vector, self))

    # -------------------------------------------------------------------------
    def to_json(self):
        """
        Return the multi-index as a list of integers.

        """
        return list(self)

    # -------------------------------------------------------------------------
    def __repr__(self):
        """
        Return a compact representation.

        """
        return 'MultiIndex({comp})'.format(comp = tuple(self))


# -----------------------------------------------------------------------------
def _check_same_dimension(p, q):
    """
    Raise DimensionError if p and q have different lengths.

    """
    if len(p) != len(q):
        raise DimensionError(
            'Multi-index dimension mismatch: {lp} != {lq}'.format(
                                                lp = len(p), lq = len(q)))


# -----------------------------------------------------------------------------
def grlex_key(p):
    """
    Return a sort key realizing the graded lexicographical order.

    """
    return (sum(p), tuple(-value for value in p))


# -----------------------------------------------------------------------------
def compare_grlex(p, q):
    """
    Return the Ordering of p relative to q in graded lexicographical order.

    """
    _check_same_dimension(p, q)
    key_p = grlex_key(p)
    key_q = grlex_key(q)
    if key_p < key_q:
        return Ordering.LESS
    if key_p > key_q:
        return Ordering.GREATER
    return Ordering.EQUAL


# -----------------------------------------------------------------------------
def _check_positive(name, value):
    """
    Raise ParameterError unless value is a positive integer.

    """
    if isinstance(value, bool) or int(value) != value or value < 1:
        raise ParameterError(
            '{name} must be a positive integer, got {val!r}.'.format(
                                                    name = name, val = value))


# -----------------------------------------------------------------------------
def enumerate_degree(n, d):
    """
    Return all multi-indices of dimension n and total degree d in grlex order.

    """
    _check_positive('n', n)
    _check_positive('d', d)
    return [MultiIndex(comp) for comp in _compositions(int(n), int(d))]


# -----------------------------------------------------------------------------
@functools.lru_cache(maxsize = None)
def _compositions(n, d):
    """
    Return compositions of d into n nonnegative parts, largest first part first.

    """
    if n == 1:
        return ((d,),)
    result = []
    for head in range(d, -1, -1):
        for tail in _compositions(n - 1, d - head):
            result.append((head,) + tail)
    return tuple(result)


# -----------------------------------------------------------------------------
def enumerate_upto(n, d_max):
    """
    Return all multi-indices with 1 <= |p| <= d_max in grlex order.

    """
    _check_positive('d_max', d_max)
    result = []
    for d in range(1, int(d_max) + 1):
        result.extend(enumerate_degree(n, d))
    return result


# -----------------------------------------------------------------------------
def count_degree(n, d):
    """
    Return the number of multi-indices of dimension n and degree d.

    """
    _check_positive('n', n)
    _check_positive('d', d)
    return math.comb(d + n - 1, d)


# -----------------------------------------------------------------------------
def dim_polyspace(n, d):
    """
    Return the dimension C(d+n, d) - 1 of the polynomials of degree 1..d.

    """
    _check_positive('n', n)
    _check_positive('d', d)
    return math.comb(d + n, d) - 1


# -----------------------------------------------------------------------------
def from_json(data, n = None):
    """
    Return a MultiIndex parsed from a JSON array of integers.

    """
    index = MultiIndex(data)
    if n is not None and index.n != n:
        raise DimensionError(
            'Expected a multi-index of dimension {n}, got {data}.'.format(
                                                        n = n, data = data))
    return index


# -----------------------------------------------------------------------------
def require_label(p):
    """
    Return p as a MultiIndex, rejecting the zero index.

    """
    return MultiIndex.label(p)
