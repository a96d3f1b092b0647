# -*- coding: utf-8 -*-
"""
Functional specification for the levychaos.simulate.montecarlo module.

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
class SpecifyEstimate:
    """
    Spec for the levychaos.simulate.montecarlo.estimate function.

    """

    # -------------------------------------------------------------------------
    def it_uses_the_unbiased_standard_error(self):
        """
        se = std(ddof = 1) / sqrt(N).

        """
        import levychaos.simulate.montecarlo  # pylint: disable=C0415

        result = levychaos.simulate.montecarlo.estimate([1.0, 2.0, 3.0, 4.0],
                                                        seed = 5)
        assert result.mean == 2.5
        assert result.se == pytest.approx(numpy.std([1, 2, 3, 4], ddof = 1)
                                          / 2.0)
        assert result.to_dict() == { 'mean': 2.5, 'se': result.se,
                                     'n': 4, 'seed': 5 }

    # -------------------------------------------------------------------------
    def it_needs_two_samples(self):
        """
        A single sample has no standard error.

        """
        import levychaos.exception            # pylint: disable=C0415
        import levychaos.simulate.montecarlo  # pylint: disable=C0415

        with pytest.raises(levychaos.exception.ParameterError):
            levychaos.simulate.montecarlo.estimate([1.0], seed = 0)

    # -------------------------------------------------------------------------
    def it_scores_exact_agreement_as_zero(self):
        """
        A zero standard error with an exact mean is not a failure.

        """
        import levychaos.simulate.montecarlo  # pylint: disable=C0415

        result = levychaos.simulate.montecarlo.estimate([[1.0, 2.0],
                                                         [1.0, 2.0]], seed = 0)
        assert result.zscore([1.0, 2.0]).tolist() == [0.0, 0.0]
        assert result.within([1.0, 2.0])
        assert not result.within([1.0, 2.5])


# =============================================================================
class SpecifyMcExpectation:
    """
    Spec for the levychaos.simulate.montecarlo.mc_expectation function.

    """

    # -------------------------------------------------------------------------
    def it_reproduces_a_constant_functional(self):
        """
        f = 1 gives mean 1 and se 0.

        """
        import levychaos.simulate.montecarlo  # pylint: disable=C0415

        result = levychaos.simulate.montecarlo.mc_expectation(
                            _model('two_atom_doc'), lambda path: 1.0,
                            num_paths = 50, seed = 1)
        assert result.mean == 1.0
        assert result.se == 0.0
        assert result.count == 50

    # -------------------------------------------------------------------------
    def it_estimates_the_jump_intensity(self):
        """
        The mean number of jumps of a rate 2 atom is 2.

        """
        import levychaos.simulate.montecarlo  # pylint: disable=C0415

        result = levychaos.simulate.montecarlo.mc_expectation(
                            _model('single_atom_doc', rate = 2.0),
                            lambda path: path.num_jumps,
                            num_paths = 20000, seed = 17)
        assert result.within(2.0)
        assert result.se == pytest.approx(numpy.sqrt(2.0 / 20000), rel = 0.1)

    # -------------------------------------------------------------------------
    def it_estimates_a_power_jump_moment(self):
        """
        E[X^(1,1)(1)] = m_(1,1) = 3 for the two atom model.

        """
        import levychaos.simulate             # pylint: disable=C0415
        import levychaos.simulate.montecarlo  # pylint: disable=C0415

        result = levychaos.simulate.montecarlo.mc_expectation(
                            _model('two_atom_doc'),
                            lambda path: levychaos.simulate.power_jump(
                                                        path, (1, 1), 1.0),
                            num_paths = 20000, seed = 3)
        assert result.within(3.0)

    # -------------------------------------------------------------------------
    def it_matches_the_untruncated_mean_only_when_compensated(self):
        """
        E[X(1)] of truncated gamma is 1 with compensation, exp(-eps) without.

        """
        import levychaos.simulate             # pylint: disable=C0415
        import levychaos.simulate.montecarlo  # pylint: disable=C0415

        def functional(path):
            return levychaos.simulate.process_value(path, 1.0, 0)

        compensated = levychaos.simulate.montecarlo.mc_expectation(
                            _model('gamma_1d_doc', truncation = 0.1,
                                                   compensate = True),
                            functional, num_paths = 20000, seed = 8)
        plain       = levychaos.simulate.montecarlo.mc_expectation(
                            _model('gamma_1d_doc', truncation = 0.1),
                            functional, num_paths = 20000, seed = 8)
        assert compensated.within(1.0)
        assert plain.within(math.exp(-0.1))
        assert not plain.within(1.0, num_se = 8.0)

    # -------------------------------------------------------------------------
    def it_does_not_depend_on_the_thread_count(self):
        """
        Per path streams make results identical across thread counts.

        """
        import levychaos.simulate             # pylint: disable=C0415
        import levychaos.simulate.montecarlo  # pylint: disable=C0415

        model = _model('five_atom_doc')

        def functional(path):
            return levychaos.simulate.process_value(path, 1.0)

        serial = levychaos.simulate.montecarlo.evaluate_paths(
                            model, functional, 200, seed = 21, threads = 1)
        pooled = levychaos.simulate.montecarlo.evaluate_paths(
                            model, functional, 200, seed = 21, threads = 4)
        assert numpy.array_equal(serial, pooled)

    # -------------------------------------------------------------------------
    def it_names_the_failing_path(self):
        """
        Errors carry the path index and the seed.

        """
        import levychaos.exception            # pylint: disable=C0415
        import levychaos.simulate.montecarlo  # pylint: disable=C0415

        def functional(path):
            raise levychaos.exception.DomainError('bad value')

        with pytest.raises(levychaos.exception.DomainError) as info:
            levychaos.simulate.montecarlo.mc_expectation(
                            _model('two_atom_doc'), functional,
                            num_paths = 3, seed = 12)
        assert 'path 0' in str(info.value)
        assert 'seed 12' in str(info.value)

    # -------------------------------------------------------------------------
    def it_needs_two_paths(self):
        """
        N < 2 is rejected.

        """
        import levychaos.exception            # pylint: disable=C0415
        import levychaos.simulate.montecarlo  # pylint: disable=C0415

        with pytest.raises(levychaos.exception.ParameterError):
            levychaos.simulate.montecarlo.mc_expectation(
                            _model('two_atom_doc'), lambda path: 1.0,
                            num_paths = 1, seed = 0)
