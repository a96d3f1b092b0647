# -*- coding: utf-8 -*-
"""
Functional specification for the levychaos.multiindex package.

"""


import math

import hypothesis
import hypothesis.strategies as st
import pytest


# -----------------------------------------------------------------------------
def _index_triples(n_max = 4, c_max = 5):
    """
    Return a strategy for triples of equal length component lists.

    """
    return st.integers(min_value = 1, max_value = n_max).flatmap(
        lambda n: st.tuples(*(
            st.lists(st.integers(min_value = 0, max_value = c_max),
                     min_size = n, max_size = n) for _ in range(3))))


# =============================================================================
class SpecifyMultiIndex:
    """
    Spec for the levychaos.multiindex.MultiIndex class.

    """

    # -------------------------------------------------------------------------
    def it_reports_degree_and_factorial(self):
        """
        MultiIndex exposes |p| and p!.

        """
        import levychaos.multiindex  # pylint: disable=C0415

        p = levychaos.multiindex.MultiIndex((3, 0, 2))
        assert p.degree    == 5
        assert p.factorial == 12
        assert p.n         == 3

    # -------------------------------------------------------------------------
    def it_adds_componentwise(self):
        """
        MultiIndex addition is componentwise, not concatenation.

        """
        import levychaos.multiindex  # pylint: disable=C0415

        p = levychaos.multiindex.MultiIndex((1, 2))
        q = levychaos.multiindex.MultiIndex((2, 0))
        assert p + q == (3, 2)
        assert (p + q) - q == p

    # -------------------------------------------------------------------------
    def it_rejects_negative_components(self):
        """
        MultiIndex components are nonnegative.

        """
        import levychaos.exception   # pylint: disable=C0415
        import levychaos.multiindex  # pylint: disable=C0415

        with pytest.raises(levychaos.exception.ParameterError):
            levychaos.multiindex.MultiIndex((1, -1))

    # -------------------------------------------------------------------------
    @pytest.mark.parametrize('components', ['a', (1, 'x'), (1, None),
                                            (1.5, 0), (float('nan'),),
                                            (float('inf'), 1), (True, 0)])
    def it_rejects_non_integer_components(self, components):
        """
        Non-integer components raise ParameterError, which exits with 2.

        """
        import levychaos.exception   # pylint: disable=C0415
        import levychaos.multiindex  # pylint: disable=C0415

        with pytest.raises(levychaos.exception.ParameterError) as info:
            levychaos.multiindex.MultiIndex(components)
        assert levychaos.exception.exit_code(info.value) == 2

    # -------------------------------------------------------------------------
    def it_rejects_the_zero_index_as_a_label(self):
        """
        MultiIndex.label rejects |p| = 0.

        """
        import levychaos.exception   # pylint: disable=C0415
        import levychaos.multiindex  # pylint: disable=C0415

        with pytest.raises(levychaos.exception.ParameterError):
            levychaos.multiindex.MultiIndex.label((0, 0))
        assert levychaos.multiindex.MultiIndex.label((0, 1)).degree == 1

    # -------------------------------------------------------------------------
    def it_rejects_mixed_dimension_arithmetic(self):
        """
        Adding indices of different length raises DimensionError.

        """
        import levychaos.exception   # pylint: disable=C0415
        import levychaos.multiindex  # pylint: disable=C0415

        with pytest.raises(levychaos.exception.DimensionError):
            _ = (levychaos.multiindex.MultiIndex((1, 0))
                 + levychaos.multiindex.MultiIndex((1, 0, 0)))

    # -------------------------------------------------------------------------
    def it_serializes_as_a_json_array(self):
        """
        MultiIndex.to_json returns a list of integers.

        """
        import json                  # pylint: disable=C0415
        import levychaos.multiindex  # pylint: disable=C0415

        p = levychaos.multiindex.MultiIndex((2, 0, 1))
        assert json.dumps(p.to_json()) == '[2, 0, 1]'
        assert levychaos.multiindex.from_json([2, 0, 1], n = 3) == p


# =============================================================================
class SpecifyCompareGrlex:
    """
    Spec for the levychaos.multiindex.compare_grlex function.

    """

    # -------------------------------------------------------------------------
    def it_breaks_degree_ties_with_larger_first_component_earlier(self):
        """
        (2,0) precedes (1,1).

        """
        import levychaos.multiindex as mi  # pylint: disable=C0415

        assert mi.compare_grlex((1, 1), (2, 0)) == mi.Ordering.GREATER
        assert mi.compare_grlex((2, 0), (1, 1)) == mi.Ordering.LESS

    # -------------------------------------------------------------------------
    def it_orders_by_degree_first(self):
        """
        (0,1) precedes (1,1).

        """
        import levychaos.multiindex as mi  # pylint: disable=C0415

        assert mi.compare_grlex((0, 1), (1, 1)) == mi.Ordering.LESS

    # -------------------------------------------------------------------------
    def it_is_reflexive(self):
        """
        An index compares equal to itself.

        """
        import levychaos.multiindex as mi  # pylint: disable=C0415

        assert mi.compare_grlex((3, 0, 1), (3, 0, 1)) == mi.Ordering.EQUAL

    # -------------------------------------------------------------------------
    def it_rejects_length_mismatch(self):
        """
        Comparing indices of different length raises DimensionError.

        """
        import levychaos.exception         # pylint: disable=C0415
        import levychaos.multiindex as mi  # pylint: disable=C0415

        with pytest.raises(levychaos.exception.DimensionError):
            mi.compare_grlex((1, 0), (1,))

    # -------------------------------------------------------------------------
    @hypothesis.given(_index_triples())
    def it_is_a_total_order(self, triple):
        """
        compare_grlex is antisymmetric, transitive and total.

        """
        import levychaos.multiindex as mi  # pylint: disable=C0415

        (p, q, r) = triple
        cmp_pq = mi.compare_grlex(p, q)
        assert mi.compare_grlex(q, p) == -cmp_pq
        if cmp_pq == mi.Ordering.EQUAL:
            assert tuple(p) == tuple(q)
        if (cmp_pq == mi.Ordering.LESS
                and mi.compare_grlex(q, r) == mi.Ordering.LESS):
            assert mi.compare_grlex(p, r) == mi.Ordering.LESS


# =============================================================================
class SpecifyEnumerateDegree:
    """
    Spec for the levychaos.multiindex.enumerate_degree function.

    """

    # -------------------------------------------------------------------------
    def it_lists_degree_two_in_two_dimensions(self):
        """
        n=2, d=2 gives (2,0), (1,1), (0,2).

        """
        import levychaos.multiindex as mi  # pylint: disable=C0415

        assert mi.enumerate_degree(2, 2) == [(2, 0), (1, 1), (0, 2)]

    # -------------------------------------------------------------------------
    def it_lists_unit_vectors_at_degree_one(self):
        """
        n=3, d=1 gives the unit vectors in order.

        """
        import levychaos.multiindex as mi  # pylint: disable=C0415

        assert mi.enumerate_degree(3, 1) == [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
        assert len(mi.enumerate_degree(2, 4)) == 5

    # -------------------------------------------------------------------------
    def it_rejects_degree_zero(self):
        """
        d = 0 is rejected.

        """
        import levychaos.exception         # pylint: disable=C0415
        import levychaos.multiindex as mi  # pylint: disable=C0415

        with pytest.raises(levychaos.exception.ParameterError):
            mi.enumerate_degree(2, 0)

    # -------------------------------------------------------------------------
    @pytest.mark.parametrize('n', [1, 2, 3, 4, 5])
    def it_matches_the_dimension_formulas(self, n):
        """
        Per-degree and cumulative counts match the binomial formulas.

        """
        import levychaos.multiindex as mi  # pylint: disable=C0415

        total = 0
        for d in range(1, 11):
            indices = mi.enumerate_degree(n, d)
            assert len(indices) == math.comb(d + n - 1, d)
            assert len(indices) == mi.count_degree(n, d)
            total += len(indices)
            assert total == mi.dim_polyspace(n, d)
            for (p, q) in zip(indices[:-1], indices[1:]):
                assert mi.compare_grlex(p, q) == mi.Ordering.LESS


# =============================================================================
class SpecifyDimPolyspace:
    """
    Spec for the levychaos.multiindex.dim_polyspace function.

    """

    # -------------------------------------------------------------------------
    def it_returns_binomial_minus_one(self):
        """
        dim_polyspace(n, d) = C(d+n, d) - 1.

        """
        import levychaos.multiindex as mi  # pylint: disable=C0415

        assert mi.dim_polyspace(2, 1) == 2
        assert mi.dim_polyspace(1, 3) == 3
        assert mi.dim_polyspace(3, 2) == 9

    # -------------------------------------------------------------------------
    def it_agrees_with_enumerate_upto(self):
        """
        enumerate_upto has dim_polyspace entries.

        """
        import levychaos.multiindex as mi  # pylint: disable=C0415

        assert len(mi.enumerate_upto(3, 4)) == mi.dim_polyspace(3, 4)
