# -*- coding: utf-8 -*-
"""
Functional specification for the levychaos.simulate package.

"""


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
class SpecifySamplePath:
    """
    Spec for the levychaos.simulate.SamplePath class.

    """

    # -------------------------------------------------------------------------
    def it_requires_increasing_times_inside_the_horizon(self):
        """
        Jump times are strictly increasing and lie in (0, T].

        """
        import levychaos.exception  # pylint: disable=C0415
        import levychaos.simulate   # pylint: disable=C0415

        for times in ([0.5, 0.5], [0.0, 0.5], [0.5, 1.5]):
            with pytest.raises(levychaos.exception.DomainError):
                levychaos.simulate.SamplePath(
                                horizon = 1.0,
                                times   = times,
                                jumps   = [[1.0], [1.0]],
                                drift   = [0.0],
                                sigma   = [[0.0]])

    # -------------------------------------------------------------------------
    def it_is_read_only(self, two_jump_path):
        """
        The recorded arrays cannot be modified.

        """
        with pytest.raises(ValueError):
            two_jump_path.jumps[0, 0] = 5.0

    # -------------------------------------------------------------------------
    def it_rejects_times_outside_the_horizon(self, two_jump_path):
        """
        Evaluation times must lie in [0, T].

        """
        import levychaos.exception  # pylint: disable=C0415
        import levychaos.simulate   # pylint: disable=C0415

        with pytest.raises(levychaos.exception.DomainError):
            levychaos.simulate.power_jump(two_jump_path, (1, 0), 1.5)


# =============================================================================
class SpecifyGrid:
    """
    Spec for the levychaos.simulate.grid function.

    """

    # -------------------------------------------------------------------------
    def it_ends_exactly_at_the_horizon(self):
        """
        The last step may be shorter than dt.

        """
        import levychaos.simulate  # pylint: disable=C0415

        points = levychaos.simulate.grid(1.0, 0.3)
        assert numpy.allclose(points, [0.3, 0.6, 0.9, 1.0])
        assert points[-1] == 1.0
        assert levychaos.simulate.grid(1.0, 0.01).size == 100


# =============================================================================
class SpecifySimulatePath:
    """
    Spec for the levychaos.simulate.simulate_path function.

    """

    # -------------------------------------------------------------------------
    def it_follows_the_drift_without_jumps(self):
        """
        A = (1, 0) with no jumps gives X(t) = (t, 0).

        """
        import levychaos.simulate  # pylint: disable=C0415

        path = levychaos.simulate.simulate_path(_model('pure_drift_doc'), 1.0)
        assert path.num_jumps == 0
        assert not path.on_grid
        assert levychaos.simulate.process_value(path, 0.4).tolist() == \
                                                                    [0.4, 0.0]

    # -------------------------------------------------------------------------
    def it_is_reproducible_per_stream(self):
        """
        Same seed and stream give identical paths.

        """
        import levychaos.simulate  # pylint: disable=C0415

        model  = _model('five_atom_doc')
        first  = levychaos.simulate.simulate_path(model, 2.0, seed = 9,
                                                  stream = 3)
        second = levychaos.simulate.simulate_path(model, 2.0, seed = 9,
                                                  stream = 3)
        other  = levychaos.simulate.simulate_path(model, 2.0, seed = 9,
                                                  stream = 4)
        assert numpy.array_equal(first.times, second.times)
        assert numpy.array_equal(first.jumps, second.jumps)
        assert first.summary() == second.summary()
        assert not (first.num_jumps == other.num_jumps
                    and numpy.array_equal(first.times, other.times))

    # -------------------------------------------------------------------------
    def it_draws_only_atoms_of_the_measure(self):
        """
        Discrete jumps are atoms and times are sorted in (0, T].

        """
        import levychaos.simulate  # pylint: disable=C0415

        model = _model('two_atom_doc')
        path  = levychaos.simulate.simulate_path(model, 5.0, seed = 1)
        atoms = {(1.0, 1.0), (1.0, 2.0)}
        assert path.num_jumps > 0
        assert {tuple(jump) for jump in path.jumps.tolist()} <= atoms
        assert numpy.all(numpy.diff(path.times) > 0)
        assert 0.0 < path.times[0] and path.times[-1] <= 5.0

    # -------------------------------------------------------------------------
    def it_needs_finite_intensity(self):
        """
        Untruncated infinite activity cannot be simulated.

        """
        import levychaos.exception  # pylint: disable=C0415
        import levychaos.simulate   # pylint: disable=C0415

        with pytest.raises(levychaos.exception.ConfigurationError):
            levychaos.simulate.simulate_path(_model('gamma_1d_doc'), 1.0)
        path = levychaos.simulate.simulate_path(
                            _model('gamma_1d_doc', truncation = 0.05), 1.0)
        assert numpy.all(path.jumps >= 0.05)

    # -------------------------------------------------------------------------
    def it_needs_a_grid_step_for_brownian_motion(self):
        """
        Sigma != 0 requires dt.

        """
        import levychaos.exception  # pylint: disable=C0415
        import levychaos.simulate   # pylint: disable=C0415

        model = _model('brownian_doc')
        with pytest.raises(levychaos.exception.ConfigurationError):
            levychaos.simulate.simulate_path(model, 1.0)
        path = levychaos.simulate.simulate_path(model, 1.0, dt = 0.01)
        assert path.on_grid
        assert path.increments.shape == (100, 2)
        assert levychaos.simulate.bv_residual(path, 1.0) == pytest.approx(
                        float(numpy.max(numpy.abs(path.brownian(1.0)))))


# =============================================================================
class SpecifyPowerJump:
    """
    Spec for the levychaos.simulate.power_jump function.

    """

    # -------------------------------------------------------------------------
    def it_sums_products_of_jump_components(self, two_jump_path):
        """
        Hand enumerated jump sums.

        """
        import levychaos.simulate  # pylint: disable=C0415

        assert levychaos.simulate.power_jump(two_jump_path, (1, 1), 1.0) == 4.0
        assert levychaos.simulate.power_jump(two_jump_path, (2, 0), 0.5) == 1.0
        assert levychaos.simulate.power_jump(two_jump_path, (1, 1), 0.0) == 0.0
        assert levychaos.simulate.power_jump(two_jump_path, (1, 1), 0.3) == 2.0

    # -------------------------------------------------------------------------
    def it_agrees_with_the_vectorized_form(self, two_jump_path):
        """
        power_jumps evaluates many indices at once.

        """
        import levychaos.multiindex  # pylint: disable=C0415
        import levychaos.simulate    # pylint: disable=C0415

        indices = levychaos.multiindex.enumerate_upto(2, 3)
        values  = levychaos.simulate.power_jumps(two_jump_path, indices, 0.8)
        for (p, value) in zip(indices, values):
            assert value == levychaos.simulate.power_jump(two_jump_path,
                                                          p, 0.8)


# =============================================================================
class SpecifyTeugels:
    """
    Spec for the levychaos.simulate.teugels function.

    """

    # -------------------------------------------------------------------------
    def it_compensates_the_drift(self):
        """
        Y^(1,0)(t) = t - 1 t = 0 for pure drift.

        """
        import levychaos.moments   # pylint: disable=C0415
        import levychaos.simulate  # pylint: disable=C0415

        model = _model('pure_drift_doc')
        table = levychaos.moments.moment_table(model, 1)
        path  = levychaos.simulate.simulate_path(model, 1.0)
        for t in (0.0, 0.5, 1.0):
            assert levychaos.simulate.teugels(path, table, (1, 0), t) == 0.0
            assert levychaos.simulate.teugels(path, table, (2, 0), t) == 0.0

    # -------------------------------------------------------------------------
    def it_subtracts_the_moment_rate(self):
        """
        Y^p(t) = X^p(t) - m_p t for |p| >= 2.

        """
        import levychaos.moments   # pylint: disable=C0415
        import levychaos.simulate  # pylint: disable=C0415

        model = _model('two_atom_doc')
        table = levychaos.moments.moment_table(model, 1)
        path  = levychaos.simulate.simulate_path(model, 1.0, seed = 4)
        value = levychaos.simulate.teugels(path, table, (1, 1), 0.75)
        expected = (levychaos.simulate.power_jump(path, (1, 1), 0.75)
                    - 3.0 * 0.75)
        assert value == expected
        vector = levychaos.simulate.teugels_vector(
                            path, table, [(1, 0), (0, 1), (1, 1)], 0.75)
        assert vector[2] == expected

    # -------------------------------------------------------------------------
    def it_refuses_a_table_of_another_model(self):
        """
        Fingerprints of path and table must agree.

        """
        import levychaos.exception  # pylint: disable=C0415
        import levychaos.moments    # pylint: disable=C0415
        import levychaos.simulate   # pylint: disable=C0415

        table = levychaos.moments.moment_table(_model('five_atom_doc'), 1)
        path  = levychaos.simulate.simulate_path(_model('two_atom_doc'), 1.0)
        with pytest.raises(levychaos.exception.ConfigurationError):
            levychaos.simulate.teugels(path, table, (1, 0), 1.0)


# =============================================================================
class SpecifyEvaluateBasis:
    """
    Spec for the levychaos.simulate.evaluate_basis function.

    """

    # -------------------------------------------------------------------------
    def it_reduces_to_teugels_for_an_identity_basis(self):
        """
        C = I gives back the Teugels values.

        """
        import levychaos.moments     # pylint: disable=C0415
        import levychaos.multiindex  # pylint: disable=C0415
        import levychaos.orthobasis  # pylint: disable=C0415
        import levychaos.simulate    # pylint: disable=C0415

        model   = _model('two_atom_doc')
        table   = levychaos.moments.moment_table(model, 1)
        indices = levychaos.multiindex.enumerate_upto(2, 2)
        basis   = levychaos.orthobasis.orthogonalize(numpy.eye(5), indices)
        path    = levychaos.simulate.simulate_path(model, 1.0, seed = 2)
        values  = levychaos.simulate.evaluate_basis(path, basis, table, 1.0)
        expected = levychaos.simulate.teugels_vector(path, table, indices, 1.0)
        assert numpy.array_equal(values, expected)

    # -------------------------------------------------------------------------
    def it_collapses_to_the_first_teugels_martingale(self):
        """
        A unit atom keeps only H^(1) = Y^(1).

        """
        import levychaos.moments     # pylint: disable=C0415
        import levychaos.orthobasis  # pylint: disable=C0415
        import levychaos.simulate    # pylint: disable=C0415

        model = _model('single_atom_doc')
        table = levychaos.moments.moment_table(model, 3)
        (basis, _) = levychaos.orthobasis.build(table, 3)
        path  = levychaos.simulate.simulate_path(model, 1.0, seed = 8)
        values = levychaos.simulate.evaluate_basis(path, basis, table, 1.0)
        assert values.tolist() == [
                        levychaos.simulate.teugels(path, table, (1,), 1.0)]


# =============================================================================
class SpecifyBracket:
    """
    Spec for the levychaos.simulate.bracket function.

    """

    # -------------------------------------------------------------------------
    def it_adds_the_continuous_part_for_first_order_pairs(
                                                    self, synthetic_table):
        """
        One jump (1, 2) with Sigma = I gives [Y^e1, Y^e1](1) = 1 + 1.

        """
        import levychaos.simulate  # pylint: disable=C0415

        path = levychaos.simulate.SamplePath(horizon = 1.0,
                                             times   = [0.5],
                                             jumps   = [[1.0, 2.0]],
                                             drift   = [0.0, 0.0],
                                             sigma   = numpy.eye(2))
        assert levychaos.simulate.bracket(
                        path, synthetic_table, (1, 0), (1, 0), 1.0) == 2.0
        assert levychaos.simulate.bracket(
                        path, synthetic_table, (1, 1), (1, 0), 1.0) == 2.0
        assert levychaos.simulate.bracket(
                        path, synthetic_table, (1, 0), (0, 1), 0.25) == 0.0

    # -------------------------------------------------------------------------
    def it_matches_the_matrix_form(self, two_jump_path, synthetic_table):
        """
        bracket_matrix holds every pairwise bracket.

        """
        import levychaos.multiindex  # pylint: disable=C0415
        import levychaos.simulate    # pylint: disable=C0415

        indices = levychaos.multiindex.enumerate_upto(2, 2)
        matrix  = levychaos.simulate.bracket_matrix(two_jump_path,
                                                    synthetic_table,
                                                    indices, 1.0)
        for (row, p) in enumerate(indices):
            for (col, q) in enumerate(indices):
                assert matrix[row, col] == levychaos.simulate.bracket(
                                    two_jump_path, synthetic_table, p, q, 1.0)


# =============================================================================
class SpecifyWriteCsv:
    """
    Spec for the levychaos.simulate.write_csv function.

    """

    # -------------------------------------------------------------------------
    def it_writes_jumps_and_grid(self, tmp_path):
        """
        One row per jump and one row per grid step.

        """
        import levychaos.simulate  # pylint: disable=C0415

        model = _model('jump_diffusion_doc')
        path  = levychaos.simulate.simulate_path(model, 1.0, dt = 0.25,
                                                 seed = 6)
        levychaos.simulate.write_csv(path,
                                     str(tmp_path / 'jumps.csv'),
                                     str(tmp_path / 'grid.csv'))
        jumps = (tmp_path / 'jumps.csv').read_text().splitlines()
        steps = (tmp_path / 'grid.csv').read_text().splitlines()
        assert jumps[0] == 't_jump,dx_1'
        assert len(jumps) == path.num_jumps + 1
        assert steps[0] == 't_grid,db_1'
        assert len(steps) == 5
        assert steps[-1].startswith('1.0,')
