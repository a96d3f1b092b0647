# -*- coding: utf-8 -*-
"""
Functional specification for the levychaos.chaos.integral module.

"""


import pytest
import sympy


# -----------------------------------------------------------------------------
def _term(integrators, integrand = 1):
    """
    Return a ChaosTerm.

    """
    import levychaos.chaos  # pylint: disable=C0415

    return levychaos.chaos.ChaosTerm(integrators, sympy.sympify(integrand))


# =============================================================================
class SpecifyEvaluateIteratedIntegral:
    """
    Spec for levychaos.chaos.integral.evaluate_iterated_integral.

    """

    # -------------------------------------------------------------------------
    def it_weights_jumps_by_the_integrand(self, uncompensated):
        """
        int s dX_1(s) = 0.3 * 1 + 0.7 * 2.

        """
        import levychaos.chaos.integral  # pylint: disable=C0415
        import levychaos.chaos.poly      # pylint: disable=C0415

        (path, table) = uncompensated
        term  = _term([(1, 0)], levychaos.chaos.poly.time_var(1))
        value = levychaos.chaos.integral.evaluate_iterated_integral(
                                                path, table, term, 0.0, 1.0)
        assert value == pytest.approx(1.7)

    # -------------------------------------------------------------------------
    def it_orders_jumps_strictly(self, uncompensated):
        """
        Double integrals pair each jump with earlier jumps only.

        """
        import levychaos.chaos.integral  # pylint: disable=C0415
        import levychaos.oracle          # pylint: disable=C0415

        (path, table) = uncompensated
        for (p, q) in (((1, 1), (1, 0)), ((1, 0), (1, 1)), ((0, 1), (0, 1))):
            value = levychaos.chaos.integral.evaluate_iterated_integral(
                                    path, table, _term([p, q]), 0.0, 1.0)
            assert value == pytest.approx(
                            levychaos.oracle.pathwise_double_sum(path, p, q))
        value = levychaos.chaos.integral.evaluate_iterated_integral(
                    path, table, _term([(1, 1), (1, 0)]), 0.0, 1.0)
        assert value == pytest.approx(2.0)

    # -------------------------------------------------------------------------
    def it_integrates_over_the_window_only(self, uncompensated):
        """
        The window (0.5, 1] sees the second jump alone.

        """
        import levychaos.chaos.integral  # pylint: disable=C0415

        (path, table) = uncompensated
        value = levychaos.chaos.integral.evaluate_iterated_integral(
                                path, table, _term([(1, 0)]), 0.5, 0.5)
        assert value == pytest.approx(2.0)
        value = levychaos.chaos.integral.evaluate_iterated_integral(
                                path, table, _term([(1, 0), (1, 0)]), 0.5, 0.5)
        assert value == 0.0

    # -------------------------------------------------------------------------
    def it_compensates_with_the_moment_rate(self):
        """
        int Y(s-) dY(s) = (Y(t)^2 - [Y](t)) / 2 for a counting process.

        """
        import levychaos.chaos.integral  # pylint: disable=C0415
        import levychaos.moments         # pylint: disable=C0415
        import levychaos.simulate        # pylint: disable=C0415

        path  = levychaos.simulate.SamplePath(horizon = 1.0,
                                              times   = [0.3, 0.7],
                                              jumps   = [[1.0], [1.0]],
                                              drift   = [0.0],
                                              sigma   = [[0.0]])
        table = levychaos.moments.MomentTable.synthetic(1, { (1,): 1.0,
                                                             (2,): 1.0 })
        single = levychaos.chaos.integral.evaluate_iterated_integral(
                                path, table, _term([(1,)]), 0.0, 1.0)
        double = levychaos.chaos.integral.evaluate_iterated_integral(
                                path, table, _term([(1,), (1,)]), 0.0, 1.0)
        assert single == pytest.approx(1.0)
        assert double == pytest.approx((1.0 - 2.0) / 2.0)

    # -------------------------------------------------------------------------
    def it_rejects_windows_beyond_the_horizon(self, uncompensated):
        """
        t0 + t must not exceed T.

        """
        import levychaos.chaos.integral  # pylint: disable=C0415
        import levychaos.exception       # pylint: disable=C0415

        (path, table) = uncompensated
        with pytest.raises(levychaos.exception.DomainError):
            levychaos.chaos.integral.evaluate_iterated_integral(
                                path, table, _term([(1, 0)]), 0.5, 0.75)


# =============================================================================
class SpecifyEvaluateExpansion:
    """
    Spec for levychaos.chaos.integral.evaluate_expansion.

    """

    # -------------------------------------------------------------------------
    def it_reproduces_the_increment_product(self, two_atom):
        """
        Both sides agree on every jump path, in Y and in H.

        """
        import levychaos.chaos           # pylint: disable=C0415
        import levychaos.chaos.integral  # pylint: disable=C0415
        import levychaos.simulate        # pylint: disable=C0415

        (model, table, basis) = two_atom
        expansion   = levychaos.chaos.expand_increment_product(model, table,
                                                               (1, 1))
        expansion_h = levychaos.chaos.to_basis(expansion, basis)
        for stream in range(5):
            path  = levychaos.simulate.simulate_path(model, 1.0, seed = 13,
                                                     stream = stream)
            lhs   = levychaos.chaos.integral.increment_product(
                                                    path, (1, 1), 0.0, 1.0)
            rhs   = levychaos.chaos.integral.evaluate_expansion(
                                                    path, table, expansion, 1.0)
            rhs_h = levychaos.chaos.integral.evaluate_expansion(
                            path, table, expansion_h, 1.0, basis = basis)
            assert rhs == pytest.approx(lhs, abs = 1e-9)
            assert rhs_h == pytest.approx(lhs, abs = 1e-8)

    # -------------------------------------------------------------------------
    def it_needs_the_basis_of_an_h_expansion(self, two_atom):
        """
        H integrators cannot be evaluated without their coefficients.

        """
        import levychaos.chaos           # pylint: disable=C0415
        import levychaos.chaos.integral  # pylint: disable=C0415
        import levychaos.exception       # pylint: disable=C0415
        import levychaos.simulate        # pylint: disable=C0415

        (model, table, basis) = two_atom
        expansion_h = levychaos.chaos.to_basis(
                        levychaos.chaos.expand_increment_product(model, table,
                                                                 (1, 0)),
                        basis)
        path = levychaos.simulate.simulate_path(model, 1.0)
        with pytest.raises(levychaos.exception.ConfigurationError):
            levychaos.chaos.integral.evaluate_terms(path, table,
                                                    expansion_h, 1.0)


# =============================================================================
class SpecifyIncrementProduct:
    """
    Spec for levychaos.chaos.integral.increment_product.

    """

    # -------------------------------------------------------------------------
    def it_multiplies_coordinate_increments(self, uncompensated):
        """
        X(1) - X(0) = (3, 3).

        """
        import levychaos.chaos.integral  # pylint: disable=C0415

        (path, _) = uncompensated
        assert levychaos.chaos.integral.increment_product(
                                        path, (1, 1), 0.0, 1.0) == 9.0
        assert levychaos.chaos.integral.increment_product(
                                        path, (2, 0), 0.5, 0.5) == 4.0
