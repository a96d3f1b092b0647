# -*- coding: utf-8 -*-
"""
Functional specification for the levychaos.orthobasis package.

"""


import json

import numpy
import pytest


# -----------------------------------------------------------------------------
def _table(doc_name, degree, **kwargs):
    """
    Return the moment table of a standard model.

    """
    import levychaos.moments    # pylint: disable=C0415
    import levychaos.test.util  # pylint: disable=C0415

    doc = getattr(levychaos.test.util, doc_name)(**kwargs)
    return levychaos.moments.moment_table(levychaos.test.util.model(doc),
                                          degree)


# =============================================================================
class SpecifyInnerProduct:
    """
    Spec for the levychaos.orthobasis.inner_product function.

    """

    # -------------------------------------------------------------------------
    def it_adds_the_covariance_for_first_order_pairs(self):
        """
        <Y^e_i, Y^e_j> = m_{e_i+e_j} + sigma_ij.

        """
        import levychaos.orthobasis  # pylint: disable=C0415

        table = _table('two_atom_doc', 1,
                       sigma = ((1.0, 0.0), (0.0, 1.0)))
        sigma = table.sigma
        assert levychaos.orthobasis.inner_product(
                                table, sigma, (1, 0), (1, 0)) == 3.5
        assert levychaos.orthobasis.inner_product(
                                table, sigma, (1, 0), (0, 1)) == 3.0

    # -------------------------------------------------------------------------
    def it_leaves_higher_orders_to_the_jump_measure(self):
        """
        <Y^(1,1), Y^(1,0)> = m_(2,1) with no covariance term.

        """
        import levychaos.orthobasis  # pylint: disable=C0415

        table = _table('two_atom_doc', 2,
                       sigma = ((1.0, 0.0), (0.0, 1.0)))
        assert levychaos.orthobasis.inner_product(
                            table, table.sigma, (1, 1), (1, 0)) == 3.0

    # -------------------------------------------------------------------------
    def it_is_zero_between_independent_brownian_coordinates(self):
        """
        Without jumps the pairing is the covariance.

        """
        import levychaos.orthobasis  # pylint: disable=C0415

        table = _table('brownian_doc', 1)
        assert levychaos.orthobasis.inner_product(
                            table, table.sigma, (1, 0), (0, 1)) == 0.0

    # -------------------------------------------------------------------------
    def it_needs_the_table_to_cover_p_plus_q(self):
        """
        A table of too low order raises CoverageError.

        """
        import levychaos.exception   # pylint: disable=C0415
        import levychaos.orthobasis  # pylint: disable=C0415

        table = _table('two_atom_doc', 1)
        with pytest.raises(levychaos.exception.CoverageError):
            levychaos.orthobasis.inner_product(table, table.sigma,
                                               (2, 0), (1, 0))


# =============================================================================
class SpecifyGramMatrix:
    """
    Spec for the levychaos.orthobasis.gram_matrix function.

    """

    # -------------------------------------------------------------------------
    def it_is_all_ones_for_a_unit_atom(self):
        """
        Every m_p equals 1 for a single atom at 1 with unit rate.

        """
        import levychaos.orthobasis  # pylint: disable=C0415

        table = _table('single_atom_doc', 3)
        (gram, indices) = levychaos.orthobasis.gram_matrix(table,
                                                           table.sigma, 3)
        assert [tuple(p) for p in indices] == [(1,), (2,), (3,)]
        assert numpy.array_equal(gram, numpy.ones((3, 3)))

    # -------------------------------------------------------------------------
    def it_is_the_covariance_block_for_brownian_motion(self):
        """
        Pure Brownian motion gives diag(1, 1, 0, 0, 0).

        """
        import levychaos.orthobasis  # pylint: disable=C0415

        table = _table('brownian_doc', 2)
        (gram, indices) = levychaos.orthobasis.gram_matrix(table,
                                                           table.sigma, 2)
        assert [tuple(p) for p in indices] == [(1, 0), (0, 1),
                                               (2, 0), (1, 1), (0, 2)]
        assert numpy.array_equal(gram, numpy.diag([1.0, 1.0, 0, 0, 0]))

    # -------------------------------------------------------------------------
    def it_is_exactly_symmetric(self, five_atom_table):
        """
        G equals its transpose bit for bit.

        """
        import levychaos.orthobasis  # pylint: disable=C0415

        (gram, _) = levychaos.orthobasis.gram_matrix(
                            five_atom_table, five_atom_table.sigma, 2)
        assert numpy.array_equal(gram, gram.T)


# =============================================================================
class SpecifyOrthogonalize:
    """
    Spec for the levychaos.orthobasis.orthogonalize function.

    """

    # -------------------------------------------------------------------------
    def it_collapses_the_poisson_type_basis(self):
        """
        All power jump processes of a unit atom coincide.

        """
        import levychaos.orthobasis  # pylint: disable=C0415

        (basis, gram) = levychaos.orthobasis.build(
                                        _table('single_atom_doc', 3), 3)
        assert [tuple(p) for p in basis.retained] == [(1,)]
        assert [tuple(p) for p in basis.dropped]  == [(2,), (3,)]
        assert basis.coefficients.tolist() == [[1.0, 0.0, 0.0]]
        assert basis.norms == [1.0]
        assert basis.loadings.tolist() == [[1.0], [1.0], [1.0]]
        assert levychaos.orthobasis.certificate(basis, gram)['retained'] == 1

    # -------------------------------------------------------------------------
    def it_keeps_only_first_order_brownian_elements(self):
        """
        Pure Brownian motion retains the two coordinates.

        """
        import levychaos.orthobasis  # pylint: disable=C0415

        (basis, _) = levychaos.orthobasis.build(_table('brownian_doc', 2), 2)
        assert [tuple(p) for p in basis.retained] == [(1, 0), (0, 1)]
        assert len(basis.dropped) == 3

    # -------------------------------------------------------------------------
    def it_produces_orthogonal_unit_triangular_rows(self, five_atom_table):
        """
        C G C^T is diagonal and C is unit lower triangular.

        """
        import levychaos.orthobasis  # pylint: disable=C0415

        (basis, gram) = levychaos.orthobasis.build(five_atom_table, 2)
        cert = levychaos.orthobasis.certificate(basis, gram)
        assert cert['retained']  == 5
        assert cert['dropped']   == 0
        assert cert['ratio']     < 1e-12
        assert cert['unit_diagonal']
        assert cert['triangular']
        product = basis.coefficients @ gram @ basis.coefficients.T
        assert numpy.allclose(numpy.diag(product), basis.norms,
                              rtol = 1e-12, atol = 0.0)

    # -------------------------------------------------------------------------
    def it_records_loadings_that_invert_the_coefficients(
                                                    self, five_atom_table):
        """
        Y = L H, so L C is the identity on retained columns.

        """
        import levychaos.orthobasis  # pylint: disable=C0415

        (basis, _) = levychaos.orthobasis.build(five_atom_table, 2)
        product = basis.loadings @ basis.coefficients
        assert numpy.allclose(product, numpy.eye(5), atol = 1e-12)

    # -------------------------------------------------------------------------
    def it_agrees_with_direct_elimination(self, random_spd):
        """
        Modified Gram-Schmidt matches solving each projection directly.

        """
        import levychaos.multiindex  # pylint: disable=C0415
        import levychaos.oracle      # pylint: disable=C0415
        import levychaos.orthobasis  # pylint: disable=C0415

        indices = levychaos.multiindex.enumerate_degree(3, 2)
        basis   = levychaos.orthobasis.orthogonalize(random_spd, indices)
        (coef, norms, dropped) = levychaos.oracle.dense_gram_orthogonalize(
                                                                    random_spd)
        assert dropped == []
        assert numpy.allclose(basis.coefficients, coef, atol = 1e-10)
        assert numpy.allclose(basis.norms, norms, rtol = 1e-10)
        product = basis.coefficients @ random_spd @ basis.coefficients.T
        off = product - numpy.diag(numpy.diag(product))
        assert numpy.max(numpy.abs(off)) < 1e-12 * numpy.max(product)

    # -------------------------------------------------------------------------
    def it_gives_the_identity_for_an_orthogonal_gram(self):
        """
        An identity Gram matrix yields identity coefficients.

        """
        import levychaos.multiindex  # pylint: disable=C0415
        import levychaos.orthobasis  # pylint: disable=C0415

        indices = levychaos.multiindex.enumerate_upto(2, 2)
        basis   = levychaos.orthobasis.orthogonalize(numpy.eye(5), indices)
        assert numpy.array_equal(basis.coefficients, numpy.eye(5))

    # -------------------------------------------------------------------------
    def it_rejects_indefinite_and_asymmetric_input(self):
        """
        Inconsistent moments surface as NumericError.

        """
        import levychaos.exception   # pylint: disable=C0415
        import levychaos.multiindex  # pylint: disable=C0415
        import levychaos.orthobasis  # pylint: disable=C0415

        indices = levychaos.multiindex.enumerate_upto(1, 2)
        with pytest.raises(levychaos.exception.NumericError):
            levychaos.orthobasis.orthogonalize(
                        numpy.array([[1.0, 2.0], [2.0, 1.0]]), indices)
        with pytest.raises(levychaos.exception.NumericError):
            levychaos.orthobasis.orthogonalize(
                        numpy.array([[1.0, 0.5], [0.0, 1.0]]), indices)

    # -------------------------------------------------------------------------
    def it_chooses_a_second_sweep_for_ill_conditioned_input(self):
        """
        Reorthogonalization switches on above the condition threshold.

        """
        import levychaos.multiindex  # pylint: disable=C0415
        import levychaos.orthobasis  # pylint: disable=C0415

        indices = levychaos.multiindex.enumerate_upto(1, 2)
        assert not levychaos.orthobasis.orthogonalize(
                        numpy.eye(2), indices).reorthogonalized
        gram = numpy.array([[1.0, 1.0], [1.0, 1.0 + 1e-9]])
        basis = levychaos.orthobasis.orthogonalize(gram, indices)
        assert basis.reorthogonalized
        assert len(basis.retained) == 2


# =============================================================================
class SpecifyMartingaleBasis:
    """
    Spec for the levychaos.orthobasis.MartingaleBasis class.

    """

    # -------------------------------------------------------------------------
    def it_round_trips_through_json(self, five_atom_table, tmp_path):
        """
        The JSON form reconstructs an equal basis.

        """
        import levychaos.orthobasis  # pylint: disable=C0415

        (basis, _) = levychaos.orthobasis.build(five_atom_table, 2)
        filepath = tmp_path / 'basis.json'
        levychaos.orthobasis.write_json(basis, str(filepath))
        clone = levychaos.orthobasis.MartingaleBasis.from_dict(
                                            json.loads(filepath.read_text()))
        assert clone.retained    == basis.retained
        assert clone.fingerprint == five_atom_table.fingerprint
        assert numpy.array_equal(clone.coefficients, basis.coefficients)

    # -------------------------------------------------------------------------
    def it_refuses_a_foreign_fingerprint(self, five_atom_table):
        """
        A basis only combines with tables of its own model.

        """
        import levychaos.exception   # pylint: disable=C0415
        import levychaos.orthobasis  # pylint: disable=C0415

        (basis, _) = levychaos.orthobasis.build(five_atom_table, 2)
        basis.check_fingerprint(five_atom_table.fingerprint)
        with pytest.raises(levychaos.exception.ConfigurationError):
            basis.check_fingerprint('0123456789abcdef')

    # -------------------------------------------------------------------------
    def it_writes_one_csv_row_per_retained_index(
                                            self, five_atom_table, tmp_path):
        """
        The coefficient CSV has a header and one row per H.

        """
        import levychaos.orthobasis  # pylint: disable=C0415

        (basis, _) = levychaos.orthobasis.build(five_atom_table, 2)
        filepath = tmp_path / 'basis.csv'
        levychaos.orthobasis.write_csv(basis, str(filepath))
        lines = filepath.read_text().splitlines()
        assert len(lines) == 6
        assert lines[1].startswith('"[1, 0]",1.0,')
