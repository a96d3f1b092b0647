# -*- coding: utf-8 -*-
"""
Functional specification for levychaos at a system level.

"""


import math

import numpy
import pytest


# -----------------------------------------------------------------------------
def _model(name, **kwargs):
    """
    Return a standard model by document name.

    """
    import levychaos.test.util  # pylint: disable=C0415

    return levychaos.test.util.model(
                        getattr(levychaos.test.util, name)(**kwargs))


# =============================================================================
class SpecifyDimensionFormulas:
    """
    Spec for the number of multi-indices per degree.

    """

    # -------------------------------------------------------------------------
    def it_counts_indices_with_binomials(self):
        """
        C(d + n - 1, d) of degree d and C(d + n, d) - 1 up to degree d.

        """
        import levychaos.multiindex  # pylint: disable=C0415

        for n in range(1, 6):
            for d in range(1, 11):
                assert (len(levychaos.multiindex.enumerate_degree(n, d))
                        == math.comb(d + n - 1, d))
                assert (len(levychaos.multiindex.enumerate_upto(n, d))
                        == math.comb(d + n, d) - 1)


# =============================================================================
class SpecifyCertificate:
    """
    Spec for orthogonality certificates across model families.

    """

    # -------------------------------------------------------------------------
    @pytest.mark.parametrize('name, degree', [('five_atom_doc',  4),
                                              ('three_dim_doc',  4),
                                              ('brownian_doc',   4),
                                              ('negmult_doc',    4),
                                              ('gamma_copula_doc', 2)])
    def it_certifies_every_basis(self, name, degree):
        """
        C G C^T is diagonal to 1e-10 relative, C is unit triangular.

        """
        import levychaos.moments     # pylint: disable=C0415
        import levychaos.orthobasis  # pylint: disable=C0415

        table = levychaos.moments.moment_table(_model(name), degree)
        (basis, gram) = levychaos.orthobasis.build(table, degree)
        certificate = levychaos.orthobasis.certificate(basis, gram)
        assert certificate['max_offdiag'] <= 1e-10 * certificate['max_diag']
        assert certificate['unit_diagonal']
        assert certificate['triangular']


# =============================================================================
class SpecifyDegenerateBases:
    """
    Spec for models whose power jump processes coincide.

    """

    # -------------------------------------------------------------------------
    def it_collapses_a_unit_atom_at_every_degree(self):
        """
        The dropped set matches direct elimination exactly.

        """
        import levychaos.moments     # pylint: disable=C0415
        import levychaos.oracle      # pylint: disable=C0415
        import levychaos.orthobasis  # pylint: disable=C0415

        model = _model('single_atom_doc')
        for degree in range(1, 6):
            table = levychaos.moments.moment_table(model, degree)
            (basis, gram) = levychaos.orthobasis.build(table, degree)
            (_, _, dropped) = levychaos.oracle.dense_gram_orthogonalize(gram)
            assert [tuple(p) for p in basis.retained] == [(1,)]
            assert [tuple(p) for p in basis.dropped] == [
                                (d,) for d in range(2, degree + 1)]
            assert [basis.column(p) for p in basis.dropped] == dropped

    # -------------------------------------------------------------------------
    def it_keeps_first_order_brownian_elements(self):
        """
        Brownian motion keeps e_1 .. e_n only.

        """
        import levychaos.moments     # pylint: disable=C0415
        import levychaos.orthobasis  # pylint: disable=C0415

        table = levychaos.moments.moment_table(_model('brownian_doc', n = 3), 3)
        (basis, _) = levychaos.orthobasis.build(table, 3)
        assert [tuple(p) for p in basis.retained] == [(1, 0, 0), (0, 1, 0),
                                                      (0, 0, 1)]
        assert len(basis.dropped) == 16


# =============================================================================
class SpecifyPathwiseCrp:
    """
    Spec for the pathwise chaotic representation on jump models.

    """

    # -------------------------------------------------------------------------
    @pytest.mark.parametrize('name', ['two_atom_doc', 'five_atom_doc'])
    def it_holds_for_every_low_order_product(self, name):
        """
        Residuals stay below 1e-9 for all |k| <= 2.

        """
        import levychaos.chaos.verify  # pylint: disable=C0415
        import levychaos.moments       # pylint: disable=C0415
        import levychaos.multiindex    # pylint: disable=C0415
        import levychaos.orthobasis    # pylint: disable=C0415

        model = _model(name)
        table = levychaos.moments.moment_table(model, 2)
        (basis, _) = levychaos.orthobasis.build(table, 2)
        for k in levychaos.multiindex.enumerate_upto(model.n, 2):
            report = levychaos.chaos.verify.verify_crp(
                                model, table, basis, k, 'exact',
                                num_paths = 100, seed = 31)
            assert report['max_residual'] < 1e-9

    # -------------------------------------------------------------------------
    def it_decomposes_jump_paths_without_residual(self):
        """
        X(t) = a t + sum of jumps when Sigma = 0.

        """
        import levychaos.simulate  # pylint: disable=C0415

        model = _model('five_atom_doc')
        for stream in range(20):
            path = levychaos.simulate.simulate_path(model, 1.0, seed = 2,
                                                    stream = stream)
            for t in (0.25, 0.5, 1.0):
                assert levychaos.simulate.bv_residual(path, t) < 1e-12


# =============================================================================
class SpecifyMomentFunction:
    """
    Spec for the deterministic part of increment products.

    """

    # -------------------------------------------------------------------------
    def it_does_not_depend_on_the_anchor(self):
        """
        Exact coefficient equality at t0 = 0 and t0 = 0.7.

        """
        import levychaos.chaos       # pylint: disable=C0415
        import levychaos.moments     # pylint: disable=C0415
        import levychaos.multiindex  # pylint: disable=C0415

        model = _model('two_atom_doc')
        table = levychaos.moments.moment_table(model, 2)
        for k in levychaos.multiindex.enumerate_upto(2, 3):
            start = levychaos.chaos.expand_increment_product(model, table, k)
            later = levychaos.chaos.expand_increment_product(model, table, k,
                                                             anchor = 0.7)
            assert start.f_coefficients() == later.f_coefficients()

    # -------------------------------------------------------------------------
    def it_matches_simulated_increment_products(self):
        """
        E[prod increments^k] is within 4 SE of f(1) for |k| <= 3.

        """
        import levychaos.chaos                # pylint: disable=C0415
        import levychaos.moments              # pylint: disable=C0415
        import levychaos.multiindex           # pylint: disable=C0415
        import levychaos.simulate             # pylint: disable=C0415
        import levychaos.simulate.montecarlo  # pylint: disable=C0415

        model   = _model('two_atom_doc')
        table   = levychaos.moments.moment_table(model, 2)
        indices = levychaos.multiindex.enumerate_upto(2, 3)
        targets = [levychaos.chaos.expand_increment_product(
                                    model, table, k).moment_value(1.0)
                   for k in indices]

        def functional(path):
            state = levychaos.simulate.process_value(path, 1.0)
            return [float(numpy.prod(state ** numpy.asarray(k)))
                    for k in indices]

        estimate = levychaos.simulate.montecarlo.mc_expectation(
                            model, functional, num_paths = 20000, seed = 47)
        assert estimate.within(numpy.asarray(targets))


# =============================================================================
class SpecifyPredictableRegrouping:
    """
    Spec for regrouping expansions by outer integrator.

    """

    # -------------------------------------------------------------------------
    def it_preserves_every_term(self):
        """
        flatten(to_predictable_form(E)) has the terms of E for |k| <= 3.

        """
        import levychaos.chaos              # pylint: disable=C0415
        import levychaos.chaos.predictable  # pylint: disable=C0415
        import levychaos.moments            # pylint: disable=C0415
        import levychaos.multiindex         # pylint: disable=C0415

        model = _model('five_atom_doc')
        table = levychaos.moments.moment_table(model, 2)
        for k in levychaos.multiindex.enumerate_upto(2, 3):
            expansion = levychaos.chaos.expand_increment_product(model,
                                                                 table, k)
            form = levychaos.chaos.predictable.to_predictable_form(expansion)
            assert (levychaos.chaos.predictable.term_multiset(
                            levychaos.chaos.predictable.flatten(form))
                    == levychaos.chaos.predictable.term_multiset(expansion))
