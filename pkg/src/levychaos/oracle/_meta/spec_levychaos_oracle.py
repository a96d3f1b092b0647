# -*- coding: utf-8 -*-
"""
Functional specification for the levychaos.oracle package.

"""


import numpy


# =============================================================================
class SpecifyAtomSumMoment:
    """
    Spec for the levychaos.oracle.atom_sum_moment function.

    """

    # -------------------------------------------------------------------------
    def it_sums_rate_weighted_monomials(self):
        """
        Two atoms (1, 1) at rate 2 and (1, 2) at rate 1/2.

        """
        import levychaos.oracle  # pylint: disable=C0415

        atoms = [((1.0, 1.0), 2.0), ((1.0, 2.0), 0.5)]
        assert levychaos.oracle.atom_sum_moment(atoms, (1, 1)) == 3.0
        assert levychaos.oracle.atom_sum_moment(atoms, (0, 2)) == 4.0
        assert levychaos.oracle.atom_sum_moment([], (1, 1)) == 0.0


# =============================================================================
class SpecifyDenseGramOrthogonalize:
    """
    Spec for the levychaos.oracle.dense_gram_orthogonalize function.

    """

    # -------------------------------------------------------------------------
    def it_drops_dependent_candidates(self):
        """
        A rank one Gram matrix keeps only its first candidate.

        """
        import levychaos.oracle  # pylint: disable=C0415

        (coef, norms, dropped) = levychaos.oracle.dense_gram_orthogonalize(
                                                        numpy.ones((3, 3)))
        assert coef.tolist() == [[1.0, 0.0, 0.0]]
        assert norms == [1.0]
        assert dropped == [1, 2]

    # -------------------------------------------------------------------------
    def it_keeps_an_orthogonal_system(self):
        """
        The identity is its own basis.

        """
        import levychaos.oracle  # pylint: disable=C0415

        (coef, norms, dropped) = levychaos.oracle.dense_gram_orthogonalize(
                                                        numpy.eye(3))
        assert numpy.array_equal(coef, numpy.eye(3))
        assert norms == [1.0, 1.0, 1.0]
        assert not dropped


# =============================================================================
class SpecifyPathwiseDoubleSum:
    """
    Spec for the levychaos.oracle.pathwise_double_sum function.

    """

    # -------------------------------------------------------------------------
    def it_pairs_later_outer_with_earlier_inner_jumps(self):
        """
        Jumps (1, 2) then (2, 1): outer (1, 1) times inner (1, 0) is 2.

        """
        import levychaos.oracle    # pylint: disable=C0415
        import levychaos.simulate  # pylint: disable=C0415

        path = levychaos.simulate.SamplePath(horizon = 1.0,
                                             times   = [0.3, 0.7],
                                             jumps   = [[1.0, 2.0],
                                                        [2.0, 1.0]],
                                             drift   = [0.0, 0.0],
                                             sigma   = numpy.zeros((2, 2)))
        assert levychaos.oracle.pathwise_double_sum(path, (1, 1), (1, 0)) == 2.0
        assert levychaos.oracle.pathwise_double_sum(path, (1, 0), (1, 1)) == 4.0

    # -------------------------------------------------------------------------
    def it_agrees_with_the_iterated_integral_evaluator(self):
        """
        Fifty random jumps without compensators agree to 1e-10.

        """
        import levychaos.chaos           # pylint: disable=C0415
        import levychaos.chaos.integral  # pylint: disable=C0415
        import levychaos.moments         # pylint: disable=C0415
        import levychaos.multiindex      # pylint: disable=C0415
        import levychaos.oracle          # pylint: disable=C0415
        import levychaos.simulate        # pylint: disable=C0415

        rng   = levychaos.simulate.rng_for(seed = 99, stream = 0)
        path  = levychaos.simulate.SamplePath(
                            horizon = 1.0,
                            times   = numpy.sort(rng.uniform(0.01, 1.0, 50)),
                            jumps   = rng.normal(size = (50, 2)),
                            drift   = [0.0, 0.0],
                            sigma   = numpy.zeros((2, 2)))
        zeros = { p: 0.0 for p in levychaos.multiindex.enumerate_upto(2, 4) }
        table = levychaos.moments.MomentTable.synthetic(2, zeros)
        for (p, q) in (((1, 0), (0, 1)), ((2, 0), (1, 1)), ((0, 2), (0, 2))):
            term  = levychaos.chaos.ChaosTerm([p, q], 1)
            value = levychaos.chaos.integral.evaluate_iterated_integral(
                                                path, table, term, 0.0, 1.0)
            expected = levychaos.oracle.pathwise_double_sum(path, p, q)
            assert abs(value - expected) <= 1e-10 * max(1.0, abs(expected))
