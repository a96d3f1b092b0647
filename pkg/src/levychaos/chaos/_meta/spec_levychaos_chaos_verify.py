# -*- coding: utf-8 -*-
"""
Functional specification for the levychaos.chaos.verify module.

"""


import pytest


# =============================================================================
class SpecifyVerifyCrpExact:
    """
    Spec for levychaos.chaos.verify.verify_crp in exact mode.

    """

    # -------------------------------------------------------------------------
    def it_holds_pathwise_on_jump_paths(self, two_atom):
        """
        The residual stays at rounding level for k = (1, 1).

        """
        import levychaos.chaos.verify  # pylint: disable=C0415

        (model, table, basis) = two_atom
        report = levychaos.chaos.verify.verify_crp(
                            model, table, basis, (1, 1), 'exact',
                            num_paths = 200, seed = 7)
        assert report['mode'] == 'exact'
        assert report['k'] == [1, 1]
        assert report['f_t'] == 10.5
        assert report['num_terms'] == 5
        assert report['max_residual'] < 1e-9
        assert report['max_residual_basis'] < 1e-8
        assert report['moment']['n'] == 200
        assert 'pairs' in report['orthogonality']
        assert report['tol_basis'] >= report['tol']
        assert report['passed']

    # -------------------------------------------------------------------------
    def it_fails_when_the_basis_rewrite_loses_a_term(self, two_atom,
                                                     monkeypatch):
        """
        A wrong H expansion fails even though the Y expansion holds.

        """
        import levychaos.chaos         # pylint: disable=C0415
        import levychaos.chaos.verify  # pylint: disable=C0415

        to_basis = levychaos.chaos.to_basis

        def lossy(expansion, basis):
            full = to_basis(expansion, basis)
            return levychaos.chaos.ChaosExpansion(
                                    k           = full.k,
                                    f           = full.f,
                                    terms       = full.terms[:-1],
                                    anchor      = full.anchor,
                                    basis       = full.basis,
                                    fingerprint = full.fingerprint)

        monkeypatch.setattr(levychaos.chaos, 'to_basis', lossy)
        (model, table, basis) = two_atom
        report = levychaos.chaos.verify.verify_crp(
                            model, table, basis, (1, 1), 'exact',
                            num_paths = 50, seed = 7)
        assert report['max_residual'] < 1e-9
        assert report['max_residual_basis'] > report['tol_basis']
        assert not report['passed']

    # -------------------------------------------------------------------------
    def it_holds_on_an_anchored_window(self, two_atom):
        """
        Increments over (0.4, 1] expand with shifted integrands.

        """
        import levychaos.chaos.verify  # pylint: disable=C0415

        (model, table, basis) = two_atom
        report = levychaos.chaos.verify.verify_crp(
                            model, table, basis, (2, 0), 'exact',
                            num_paths = 50, seed = 3, anchor = 0.4)
        assert report['window'] == pytest.approx(0.6)
        assert report['max_residual'] < 1e-9

    # -------------------------------------------------------------------------
    def it_needs_a_pure_jump_finite_activity_model(self):
        """
        Brownian models only support mc mode.

        """
        import levychaos.chaos.verify  # pylint: disable=C0415
        import levychaos.exception     # pylint: disable=C0415
        import levychaos.moments       # pylint: disable=C0415
        import levychaos.orthobasis    # pylint: disable=C0415
        import levychaos.test.util     # pylint: disable=C0415

        model = levychaos.test.util.model(
                            levychaos.test.util.jump_diffusion_doc())
        table = levychaos.moments.moment_table(model, 2)
        (basis, _) = levychaos.orthobasis.build(table, 2)
        with pytest.raises(levychaos.exception.ConfigurationError):
            levychaos.chaos.verify.verify_crp(model, table, basis, (2,),
                                              'exact', num_paths = 10,
                                              seed = 0, dt = 0.1)

    # -------------------------------------------------------------------------
    def it_rejects_bad_arguments(self, two_atom):
        """
        Unknown modes and anchors outside [0, T) are parameter errors.

        """
        import levychaos.chaos.verify  # pylint: disable=C0415
        import levychaos.exception     # pylint: disable=C0415

        (model, table, basis) = two_atom
        with pytest.raises(levychaos.exception.ParameterError):
            levychaos.chaos.verify.verify_crp(model, table, basis, (1, 0),
                                              'approximate', num_paths = 10,
                                              seed = 0)
        with pytest.raises(levychaos.exception.ParameterError):
            levychaos.chaos.verify.verify_crp(model, table, basis, (1, 0),
                                              'exact', num_paths = 10,
                                              seed = 0, anchor = 1.0)


# =============================================================================
class SpecifyVerifyCrpMonteCarlo:
    """
    Spec for levychaos.chaos.verify.verify_crp in mc mode.

    """

    # -------------------------------------------------------------------------
    def it_has_a_centered_residual_with_brownian_motion(self):
        """
        With a discretized Brownian part the residual has mean zero.

        """
        import levychaos.chaos.verify  # pylint: disable=C0415
        import levychaos.moments       # pylint: disable=C0415
        import levychaos.orthobasis    # pylint: disable=C0415
        import levychaos.test.util     # pylint: disable=C0415

        model = levychaos.test.util.model(
                            levychaos.test.util.jump_diffusion_doc())
        table = levychaos.moments.moment_table(model, 2)
        (basis, _) = levychaos.orthobasis.build(table, 2)
        report = levychaos.chaos.verify.verify_crp(
                            model, table, basis, (2,), 'mc',
                            num_paths = 2000, seed = 19, dt = 0.05)
        assert report['mode'] == 'mc'
        assert report['residual']['n'] == 2000
        assert abs(report['residual']['z']) <= 4.0
        assert abs(report['moment']['z']) <= 4.0
