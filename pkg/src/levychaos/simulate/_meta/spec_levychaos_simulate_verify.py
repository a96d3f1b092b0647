# -*- coding: utf-8 -*-
"""
Functional specification for the levychaos.simulate.verify module.

"""


# -----------------------------------------------------------------------------
def _model(name, **kwargs):
    """
    Return a standard model by document name.

    """
    import levychaos.test.util  # pylint: disable=C0415

    return levychaos.test.util.model(
                        getattr(levychaos.test.util, name)(**kwargs))


# =============================================================================
class SpecifyVerifyMoments:
    """
    Spec for the levychaos.simulate.verify.verify_moments function.

    """

    # -------------------------------------------------------------------------
    def it_matches_empirical_moments_to_the_table(self):
        """
        Every E[X^p(T)] lies within four standard errors of m_p T.

        """
        import levychaos.moments          # pylint: disable=C0415
        import levychaos.simulate.verify  # pylint: disable=C0415

        model  = _model('two_atom_doc')
        table  = levychaos.moments.moment_table(model, 2)
        report = levychaos.simulate.verify.verify_moments(
                            model, table, 2, num_paths = 5000, seed = 2)
        assert report['kind'] == 'moments'
        assert report['n'] == 5000
        assert len(report['rows']) == 5
        targets = {tuple(row['index']): row['target'] for row in report['rows']}
        assert targets[(1, 1)] == 3.0
        assert report['passed']

    # -------------------------------------------------------------------------
    def it_holds_up_to_fourth_order_on_atomic_models(self):
        """
        E[X^p(1)] matches m_p for every |p| <= 4 in two and three dimensions.

        """
        import levychaos.moments          # pylint: disable=C0415
        import levychaos.multiindex       # pylint: disable=C0415
        import levychaos.simulate.verify  # pylint: disable=C0415

        for (name, seed) in (('five_atom_doc', 31), ('three_dim_doc', 32)):
            model  = _model(name)
            table  = levychaos.moments.moment_table(model, 2)
            report = levychaos.simulate.verify.verify_moments(
                            model, table, 4, num_paths = 20000, seed = seed)
            expected = levychaos.multiindex.enumerate_upto(model.n, 4)
            assert len(report['rows']) == len(expected)
            assert max(sum(row['index']) for row in report['rows']) == 4
            assert report['passed'], name

    # -------------------------------------------------------------------------
    def it_is_exact_for_a_deterministic_model(self):
        """
        Pure drift gives zero scores throughout.

        """
        import levychaos.moments          # pylint: disable=C0415
        import levychaos.simulate.verify  # pylint: disable=C0415

        model  = _model('pure_drift_doc')
        table  = levychaos.moments.moment_table(model, 2)
        report = levychaos.simulate.verify.verify_moments(
                            model, table, 2, num_paths = 10, seed = 0)
        assert report['max_abs_z'] == 0.0
        assert report['passed']


# =============================================================================
class SpecifyVerifyOrthogonality:
    """
    Spec for the levychaos.simulate.verify.verify_orthogonality function.

    """

    # -------------------------------------------------------------------------
    def it_finds_the_basis_orthogonal(self):
        """
        Means, products and brackets of distinct elements vanish.

        """
        import levychaos.moments          # pylint: disable=C0415
        import levychaos.orthobasis       # pylint: disable=C0415
        import levychaos.simulate.verify  # pylint: disable=C0415

        model  = _model('two_atom_doc')
        table  = levychaos.moments.moment_table(model, 2)
        (basis, _) = levychaos.orthobasis.build(table, 1)
        report = levychaos.simulate.verify.verify_orthogonality(
                            model, basis, table, num_paths = 4000, seed = 5)
        size = len(basis.retained)
        assert report['kind'] == 'orth'
        assert len(report['means']) == size
        assert len(report['products']) == size * (size - 1) // 2
        assert len(report['brackets']) == len(report['products'])
        assert report['passed']

    # -------------------------------------------------------------------------
    def it_samples_cross_terms_of_higher_order_elements(self):
        """
        A degree three basis on five atoms keeps quadratic elements.

        """
        import levychaos.moments          # pylint: disable=C0415
        import levychaos.orthobasis       # pylint: disable=C0415
        import levychaos.simulate.verify  # pylint: disable=C0415

        model  = _model('five_atom_doc')
        table  = levychaos.moments.moment_table(model, 3)
        (basis, _) = levychaos.orthobasis.build(table, 3)
        assert len(basis.retained) == 5
        assert max(p.degree for p in basis.retained) >= 2
        report = levychaos.simulate.verify.verify_orthogonality(
                            model, basis, table, num_paths = 20000, seed = 13)
        assert len(report['products']) == 10
        assert report['max_abs_z'] <= 4.0
        assert report['passed']
