# -*- coding: utf-8 -*-
"""
Functional specification for the levychaos.model package.

"""


import math

import hypothesis
import hypothesis.strategies as st
import numpy
import pytest
import scipy.integrate


# -----------------------------------------------------------------------------
def _level_density(v, u_1):
    """
    Return d1 d2 F(u_1, v) for the theta = eta = 1 copula, 0 at v = 0.

    """
    import levychaos.model.copula  # pylint: disable=C0415

    if v <= 0.0:
        return 0.0
    return levychaos.model.copula.clayton_mixed_partial((u_1, v), 1.0, 1.0)


# =============================================================================
class SpecifyLevyModel:
    """
    Spec for the levychaos.model.LevyModel class.

    """

    # -------------------------------------------------------------------------
    def it_reports_dimension_and_activity(self, two_atom, gamma_1d):
        """
        Atomic models have finite activity, untruncated gamma does not.

        """
        assert two_atom.n == 2
        assert two_atom.total_intensity() == 2.5
        assert two_atom.activity_class()  == 'finite'
        assert not two_atom.has_brownian
        assert gamma_1d.activity_class()  == 'infinite'
        assert not gamma_1d.is_finite_activity()

    # -------------------------------------------------------------------------
    def it_has_no_activity_without_jumps(self):
        """
        A pure Brownian model has activity class 'none'.

        """
        import levychaos.test.util  # pylint: disable=C0415

        model = levychaos.test.util.model(levychaos.test.util.brownian_doc())
        assert model.activity_class() == 'none'
        assert model.has_brownian

    # -------------------------------------------------------------------------
    def it_makes_truncated_gamma_finite(self, gamma_1d):
        """
        Truncation at eps leaves intensity gamma E1(lambda eps).

        """
        import scipy.special  # pylint: disable=C0415

        truncated = gamma_1d.with_truncation(0.1)
        assert truncated.activity_class() == 'finite'
        assert truncated.total_intensity() == pytest.approx(
                                        float(scipy.special.exp1(0.1)),
                                        rel = 1e-12)

    # -------------------------------------------------------------------------
    def it_rejects_an_indefinite_sigma(self):
        """
        Sigma must be positive semidefinite.

        """
        import levychaos.exception  # pylint: disable=C0415
        import levychaos.test.util  # pylint: disable=C0415

        doc = levychaos.test.util.two_atom_doc(
                                        sigma = ((1.0, 2.0), (2.0, 1.0)))
        with pytest.raises(levychaos.exception.ParameterError):
            levychaos.test.util.model(doc)

    # -------------------------------------------------------------------------
    def it_rejects_zero_atoms(self):
        """
        A zero jump is not a jump.

        """
        import levychaos.exception  # pylint: disable=C0415
        import levychaos.test.util  # pylint: disable=C0415

        doc = levychaos.test.util.two_atom_doc()
        doc['jumps']['atoms'][0]['x'] = [0.0, 0.0]
        with pytest.raises(levychaos.exception.ParameterError):
            levychaos.test.util.model(doc)

    # -------------------------------------------------------------------------
    def it_round_trips_through_its_document(self, gamma_copula):
        """
        from_dict(to_dict()) reproduces the fingerprint.

        """
        import levychaos.model  # pylint: disable=C0415

        clone = levychaos.model.from_dict(gamma_copula.to_dict())
        assert clone.fingerprint == gamma_copula.fingerprint
        assert (clone.with_truncation(0.2).fingerprint
                != gamma_copula.fingerprint)

    # -------------------------------------------------------------------------
    def it_moves_the_small_jump_mean_into_the_drift(self):
        """
        The gamma jumps below eps have mean 1 - exp(-eps).

        """
        import levychaos.model      # pylint: disable=C0415
        import levychaos.test.util  # pylint: disable=C0415

        plain       = levychaos.test.util.model(
                        levychaos.test.util.gamma_1d_doc(truncation = 0.1))
        compensated = levychaos.test.util.model(
                        levychaos.test.util.gamma_1d_doc(truncation = 0.1,
                                                         compensate = True))
        assert plain.effective_drift.tolist() == [0.0]
        assert compensated.effective_drift[0] == pytest.approx(
                                        -math.expm1(-0.1), rel = 1e-7)
        assert compensated.fingerprint != plain.fingerprint
        clone = levychaos.model.from_dict(compensated.to_dict())
        assert clone.compensate_truncation
        assert clone.with_truncation(0.2).compensate_truncation

    # -------------------------------------------------------------------------
    def it_has_nothing_to_compensate_without_truncation(self, two_atom):
        """
        Atomic and untruncated models keep their drift.

        """
        import levychaos.model      # pylint: disable=C0415
        import levychaos.test.util  # pylint: disable=C0415

        doc = levychaos.test.util.five_atom_doc()
        doc['truncation']            = 0.5
        doc['compensate_truncation'] = True
        model = levychaos.model.from_dict(doc)
        assert model.effective_drift.tolist() == [0.25, -0.5]
        assert two_atom.jumps.small_jump_mean(0.5).tolist() == [0.0, 0.0]
        untruncated = levychaos.test.util.model(
                        levychaos.test.util.gamma_1d_doc(compensate = True))
        assert untruncated.effective_drift.tolist() == [0.0]

    # -------------------------------------------------------------------------
    def it_compensates_each_copula_coordinate(self, gamma_copula):
        """
        Coordinate i gains its marginal mean minus its truncated moment.

        """
        import levychaos.multiindex  # pylint: disable=C0415

        shift = gamma_copula.jumps.small_jump_mean(0.1)
        for i in range(2):
            unit      = levychaos.multiindex.MultiIndex.unit(2, i)
            truncated = gamma_copula.jumps.moment(unit, 0.1).value
            marginal  = 1.0 / (1.0 + i)
            assert shift[i] == pytest.approx(marginal - truncated, rel = 1e-6)
            own_small = marginal * -math.expm1(-(1.0 + i) * 0.1)
            assert own_small < shift[i] < marginal

    # -------------------------------------------------------------------------
    def it_pairs_both_sides_of_a_meixner_marginal(self):
        """
        The symmetric limit of the Meixner mean is m tan(a / 2).

        """
        import levychaos.model.marginal  # pylint: disable=C0415

        for (m, a) in ((0.5, 0.5), (1.0, -1.2)):
            marginal = levychaos.model.marginal.MeixnerMarginal(m, a)
            (value, _) = marginal.first_moment()
            assert value == pytest.approx(m * math.tan(a / 2.0), rel = 1e-6)


# =============================================================================
class SpecifyClaytonF:
    """
    Spec for the levychaos.model.clayton_F function.

    """

    # -------------------------------------------------------------------------
    def it_matches_hand_evaluations(self):
        """
        Direct evaluations of the copula formula.

        """
        import levychaos.model  # pylint: disable=C0415

        assert levychaos.model.clayton_F((1.0, 1.0), 1.0, 1.0) == 0.5
        assert levychaos.model.clayton_F((1.0, -1.0), 1.0, 1.0) == 0.0
        assert levychaos.model.clayton_F(
            (1.0, 1.0, 1.0), 2.0, 0.5) == pytest.approx(
                                0.5 * 3.0 ** -0.5 * 0.5, rel = 1e-12)
        assert levychaos.model.clayton_F(
            (1.0, 1.0, 1.0), 2.0, 0.5) == pytest.approx(0.14434, abs = 1e-5)

    # -------------------------------------------------------------------------
    @hypothesis.given(
        u     = st.lists(st.floats(min_value = 0.01, max_value = 100.0),
                         min_size = 2, max_size = 4),
        scale = st.floats(min_value = 0.1, max_value = 10.0),
        theta = st.floats(min_value = 0.1, max_value = 5.0))
    def it_is_homogeneous_of_order_one(self, u, scale, theta):
        """
        F(c u) = c F(u) for c > 0.

        """
        import levychaos.model  # pylint: disable=C0415

        base   = levychaos.model.clayton_F(u, theta, 0.7)
        scaled = levychaos.model.clayton_F([scale * value for value in u],
                                           theta, 0.7)
        assert scaled == pytest.approx(scale * base, rel = 1e-12)

    # -------------------------------------------------------------------------
    def it_rejects_bad_arguments(self):
        """
        Zero arguments and nonpositive theta are rejected.

        """
        import levychaos.exception  # pylint: disable=C0415
        import levychaos.model      # pylint: disable=C0415

        with pytest.raises(levychaos.exception.DomainError):
            levychaos.model.clayton_F((0.0, 1.0), 1.0, 1.0)
        with pytest.raises(levychaos.exception.ParameterError):
            levychaos.model.clayton_F((1.0, 1.0), 0.0, 1.0)


# =============================================================================
class SpecifyTailIntegral:
    """
    Spec for the levychaos.model.tail_integral function.

    """

    # -------------------------------------------------------------------------
    def it_integrates_the_gamma_density(self, gamma_1d):
        """
        U(1) is the exponential integral E1(1).

        """
        import levychaos.model  # pylint: disable=C0415

        value = levychaos.model.tail_integral(gamma_1d.jumps, 0, 1.0)
        assert value == pytest.approx(0.219384, abs = 1e-6)
        assert levychaos.model.tail_integral(gamma_1d.jumps, 0, 60.0) < 1e-20

    # -------------------------------------------------------------------------
    def it_uses_the_signed_convention_for_negative_jumps(self):
        """
        U(x) = -nu((-inf, x]) for x < 0.

        """
        import levychaos.model      # pylint: disable=C0415
        import levychaos.test.util  # pylint: disable=C0415

        model = levychaos.test.util.model(
                                    levychaos.test.util.meixner_copula_doc())
        value = levychaos.model.tail_integral(model.jumps, 0, -1.0)
        assert value < 0.0

    # -------------------------------------------------------------------------
    def it_rejects_zero_and_atomic_measures(self, gamma_1d, two_atom):
        """
        x = 0 is outside the domain and atoms have no tail integral.

        """
        import levychaos.exception  # pylint: disable=C0415
        import levychaos.model      # pylint: disable=C0415

        with pytest.raises(levychaos.exception.DomainError):
            levychaos.model.tail_integral(gamma_1d.jumps, 0, 0.0)
        with pytest.raises(levychaos.exception.ConfigurationError):
            levychaos.model.tail_integral(two_atom.jumps, 0, 1.0)


# =============================================================================
class SpecifyCopulaLevyDensity:
    """
    Spec for the levychaos.model.copula_levy_density function.

    """

    # -------------------------------------------------------------------------
    def it_matches_the_mixed_partial_at_unit_tails(self):
        """
        d1 d2 F(1, 1) = 0.25 for theta = eta = 1.

        """
        import levychaos.model.copula  # pylint: disable=C0415

        value = levychaos.model.copula.clayton_mixed_partial((1.0, 1.0),
                                                             1.0, 1.0)
        assert value == pytest.approx(0.25, rel = 1e-14)

    # -------------------------------------------------------------------------
    def it_vanishes_off_the_positive_orthant(self, gamma_copula):
        """
        With eta = 1 mixed sign jumps carry no mass.

        """
        import levychaos.model  # pylint: disable=C0415

        assert levychaos.model.copula_levy_density(
                                gamma_copula.jumps, (0.5, -0.5)) == 0.0

    # -------------------------------------------------------------------------
    def it_integrates_to_the_marginal_density(self, gamma_copula):
        """
        Integrating out x_2 recovers the density of x_1.

        The substitution v = U_2(x_2) turns the x_2
        integral into an integral over tail levels.

        """
        import levychaos.model         # pylint: disable=C0415
        import levychaos.model.copula  # pylint: disable=C0415

        (first, second) = gamma_copula.jumps.marginals
        for x_1 in numpy.linspace(0.2, 3.0, 10):
            u_1 = first.tail(x_1)
            (mass, _) = scipy.integrate.quad(_level_density, 0.0, math.inf,
                                             args   = (u_1,),
                                             limit  = 400,
                                             epsrel = 1e-12)
            assert mass * first.density(x_1) == pytest.approx(
                                            first.density(x_1), rel = 1e-6)

            x_2     = 0.7
            density = levychaos.model.copula_levy_density(gamma_copula.jumps,
                                                          (x_1, x_2))
            expected = (levychaos.model.copula.clayton_mixed_partial(
                                    (u_1, second.tail(x_2)), 1.0, 1.0)
                        * first.density(x_1) * second.density(x_2))
            assert density == pytest.approx(expected, rel = 1e-12)

    # -------------------------------------------------------------------------
    def it_needs_at_least_two_dimensions(self, gamma_1d):
        """
        The copula density is a capability of n >= 2 models.

        """
        import levychaos.exception  # pylint: disable=C0415
        import levychaos.model      # pylint: disable=C0415

        with pytest.raises(levychaos.exception.CapabilityError):
            levychaos.model.copula_levy_density(gamma_1d.jumps, (1.0,))


# =============================================================================
class SpecifyNegmultLevyMass:
    """
    Spec for the levychaos.model.negmult_levy_mass function.

    """

    # -------------------------------------------------------------------------
    def it_matches_hand_evaluations(self):
        """
        Lattice masses (|k|-1)!/k! prod (mu lambda_i)^k_i.

        """
        import levychaos.model.negmult  # pylint: disable=C0415
        import levychaos.model          # pylint: disable=C0415

        wide = levychaos.model.negmult.NegativeMultinomialMeasure(
                                                    0.6, 1.0, [0.2, 0.2])
        assert levychaos.model.negmult_levy_mass(wide, (1, 0)) == \
                                                    pytest.approx(0.2)
        assert levychaos.model.negmult_levy_mass(wide, (2, 0)) == \
                                                    pytest.approx(0.02)
        narrow = levychaos.model.negmult.NegativeMultinomialMeasure(
                                                    0.8, 1.0, [0.1, 0.1])
        assert levychaos.model.negmult_levy_mass(narrow, (1, 1)) == \
                                                    pytest.approx(0.01)

    # -------------------------------------------------------------------------
    def it_agrees_with_a_factorial_product_on_small_lattice_points(self):
        """
        Cross check every |k| <= 6 against plain factorials.

        """
        import levychaos.model.negmult  # pylint: disable=C0415
        import levychaos.multiindex     # pylint: disable=C0415
        import levychaos.model          # pylint: disable=C0415

        measure = levychaos.model.negmult.NegativeMultinomialMeasure(
                                                    0.5, 2.0, [0.15, 0.1])
        for k in levychaos.multiindex.enumerate_upto(2, 6):
            expected = (math.factorial(sum(k) - 1)
                        / (math.factorial(k[0]) * math.factorial(k[1]))
                        * 0.3 ** k[0] * 0.2 ** k[1])
            assert levychaos.model.negmult_levy_mass(measure, k) == \
                                            pytest.approx(expected, rel = 1e-13)

    # -------------------------------------------------------------------------
    def it_enforces_the_parameter_constraint(self):
        """
        lambda + mu sum(lambda_i) = 1.

        """
        import levychaos.exception      # pylint: disable=C0415
        import levychaos.model.negmult  # pylint: disable=C0415

        with pytest.raises(levychaos.exception.ParameterError):
            levychaos.model.negmult.NegativeMultinomialMeasure(
                                                    0.5, 1.0, [0.1, 0.1])

    # -------------------------------------------------------------------------
    def it_sums_to_minus_log_lambda(self):
        """
        The total Levy mass is -log(lambda).

        """
        import levychaos.model.negmult  # pylint: disable=C0415
        import levychaos.multiindex     # pylint: disable=C0415

        measure = levychaos.model.negmult.NegativeMultinomialMeasure(
                                                    0.8, 1.0, [0.1, 0.1])
        total = math.fsum(measure.mass(k)
                          for k in levychaos.multiindex.enumerate_upto(2, 40))
        assert total == pytest.approx(-math.log(0.8), rel = 1e-12)


# =============================================================================
class SpecifyCheckHypothesis1:
    """
    Spec for the levychaos.model.check_hypothesis1 function.

    """

    # -------------------------------------------------------------------------
    def it_sums_atoms_exactly(self, two_atom):
        """
        For atoms the value is sum r_j exp(lam ||x_j||).

        """
        import levychaos.model  # pylint: disable=C0415

        report   = levychaos.model.check_hypothesis1(two_atom, 1.0, 0.5)
        expected = 2.0 * math.exp(math.sqrt(2.0)) + 0.5 * math.exp(
                                                                math.sqrt(5.0))
        assert report.holds
        assert report.value == pytest.approx(expected, rel = 1e-14)
        assert report.to_dict()['method'] == 'exact-sum'

    # -------------------------------------------------------------------------
    def it_finds_divergence_for_negative_multinomial(self):
        """
        max(mu lambda_i) exp(lam) >= 1 makes the series diverge.

        """
        import levychaos.model      # pylint: disable=C0415
        import levychaos.test.util  # pylint: disable=C0415

        model  = levychaos.test.util.model(levychaos.test.util.negmult_doc())
        report = levychaos.model.check_hypothesis1(model, 3.0, 1.0)
        assert not report.holds
        assert report.to_dict()['value'] == 'inf'
        assert levychaos.model.check_hypothesis1(model, 0.5, 1.0).holds

    # -------------------------------------------------------------------------
    @hypothesis.settings(max_examples = 25, deadline = None)
    @hypothesis.given(lam = st.floats(min_value = 0.01, max_value = 1.13))
    def it_holds_whenever_the_norm_bound_does(self, lam):
        """
        sum_i mu lambda_i exp(lam sqrt(n)) < 1 implies a positive report.

        """
        import levychaos.model      # pylint: disable=C0415
        import levychaos.test.util  # pylint: disable=C0415

        model  = levychaos.test.util.model(levychaos.test.util.negmult_doc())
        report = levychaos.model.check_hypothesis1(model, lam, 1.0)
        assert 0.2 * math.exp(lam * math.sqrt(2.0)) < 1.0
        assert report.holds
        assert math.isfinite(report.value)

    # -------------------------------------------------------------------------
    def it_compares_lambda_with_the_gamma_rate(self, gamma_1d):
        """
        Gamma tails have exponential moments only below the rate.

        """
        import scipy.special    # pylint: disable=C0415
        import levychaos.model  # pylint: disable=C0415

        below = levychaos.model.check_hypothesis1(gamma_1d, 0.5, 1.0)
        assert below.holds
        assert below.value == pytest.approx(float(scipy.special.exp1(0.5)),
                                            rel = 1e-8)
        above = levychaos.model.check_hypothesis1(gamma_1d, 1.5, 1.0)
        assert not above.holds

    # -------------------------------------------------------------------------
    def it_rejects_nonpositive_parameters(self, two_atom):
        """
        lambda and epsilon must be positive.

        """
        import levychaos.exception  # pylint: disable=C0415
        import levychaos.model      # pylint: disable=C0415

        with pytest.raises(levychaos.exception.ParameterError):
            levychaos.model.check_hypothesis1(two_atom, 0.0, 1.0)
        with pytest.raises(levychaos.exception.ParameterError):
            levychaos.model.check_hypothesis1(two_atom, 1.0, -1.0)


# =============================================================================
class SpecifySampling:
    """
    Spec for the jump samplers of the density variants.

    """

    # -------------------------------------------------------------------------
    def it_draws_copula_jumps_above_the_truncation(self, gamma_copula):
        """
        Samples lie in the positive orthant with every |x_i| >= eps.

        """
        rng   = numpy.random.Generator(numpy.random.Philox(5))
        jumps = gamma_copula.jumps.sample(rng, 200, gamma_copula.eps)
        assert jumps.shape == (200, 2)
        assert numpy.all(jumps >= 0.1 - 1e-12)

    # -------------------------------------------------------------------------
    def it_draws_negative_multinomial_lattice_points(self):
        """
        Samples are nonzero points of the nonnegative lattice.

        """
        import levychaos.test.util  # pylint: disable=C0415

        model = levychaos.test.util.model(levychaos.test.util.negmult_doc())
        rng   = numpy.random.Generator(numpy.random.Philox(5))
        jumps = model.jumps.sample(rng, 100, model.eps)
        assert numpy.all(jumps == numpy.round(jumps))
        assert numpy.all(jumps.sum(axis = 1) >= 1)
