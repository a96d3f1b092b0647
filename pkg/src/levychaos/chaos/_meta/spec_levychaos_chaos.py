# -*- coding: utf-8 -*-
"""
Functional specification for the levychaos.chaos package.

"""


import pytest
import sympy


# -----------------------------------------------------------------------------
def _setup(name, degree = 2, **kwargs):
    """
    Return (model, table) for a standard model document.

    """
    import levychaos.moments    # pylint: disable=C0415
    import levychaos.test.util  # pylint: disable=C0415

    model = levychaos.test.util.model(
                        getattr(levychaos.test.util, name)(**kwargs))
    return (model, levychaos.moments.moment_table(model, degree))


# -----------------------------------------------------------------------------
def _integrands(expansion):
    """
    Return {integrator sequence as tuples: integrand}.

    """
    return { tuple(tuple(p) for p in term.integrators): term.integrand
             for term in expansion.terms }


# =============================================================================
class SpecifyExpandIncrementProduct:
    """
    Spec for the levychaos.chaos.expand_increment_product function.

    """

    # -------------------------------------------------------------------------
    def it_expands_a_pure_drift_coordinate(self):
        """
        X_1(t) = t has f(t) = t and a single integral against Y^e1.

        """
        import levychaos.chaos       # pylint: disable=C0415
        import levychaos.chaos.poly  # pylint: disable=C0415

        (model, table) = _setup('pure_drift_doc', degree = 1)
        expansion = levychaos.chaos.expand_increment_product(model, table,
                                                             (1, 0))
        assert expansion.f == levychaos.chaos.poly.TIME
        assert list(_integrands(expansion)) == [((1, 0),)]
        assert levychaos.chaos.moment_function(expansion, 0.7) == 0.7

    # -------------------------------------------------------------------------
    def it_expands_a_mixed_product(self):
        """
        k = (1, 1) on the two atom model.

        """
        import levychaos.chaos       # pylint: disable=C0415
        import levychaos.chaos.poly  # pylint: disable=C0415

        (model, table) = _setup('two_atom_doc')
        expansion = levychaos.chaos.expand_increment_product(model, table,
                                                             (1, 1))
        assert expansion.f_coefficients() == { 1: 3,
                                               2: sympy.Rational(15, 2) }
        assert expansion.moment_value(1.0) == 10.5

        t = levychaos.chaos.poly.TIME
        integrands = _integrands(expansion)
        assert set(integrands) == { ((1, 0),), ((0, 1),), ((1, 1),),
                                    ((1, 0), (0, 1)), ((0, 1), (1, 0)) }
        assert integrands[((1, 0),)] == 3 * t
        assert integrands[((0, 1),)] == sympy.Rational(5, 2) * t
        assert integrands[((1, 1),)] == 1
        assert integrands[((1, 0), (0, 1))] == 1
        assert not levychaos.chaos.degree_violations(expansion)

    # -------------------------------------------------------------------------
    def it_expands_a_square(self):
        """
        k = 2 e_1 in one dimension has f = m_2 t + m_1^2 t^2.

        """
        import levychaos.chaos  # pylint: disable=C0415

        (model, table) = _setup('single_atom_doc', rate = 2.0)
        expansion = levychaos.chaos.expand_increment_product(model, table,
                                                             (2,))
        assert expansion.f_coefficients() == { 1: 2, 2: 4 }
        integrands = _integrands(expansion)
        assert set(integrands) == { ((1,),), ((2,),), ((1,), (1,)) }
        assert integrands[((1,), (1,))] == 2

    # -------------------------------------------------------------------------
    def it_adds_the_brownian_covariance(self):
        """
        For pure Brownian motion E[B_1(t)^2] = t.

        """
        import levychaos.chaos  # pylint: disable=C0415

        (model, table) = _setup('brownian_doc', degree = 1, n = 1)
        expansion = levychaos.chaos.expand_increment_product(model, table,
                                                             (2,))
        assert expansion.f_coefficients() == { 1: 1 }
        assert _integrands(expansion)[((1,), (1,))] == 2

    # -------------------------------------------------------------------------
    def it_shifts_integrands_but_not_f_with_the_anchor(self):
        """
        The anchor moves integration times only.

        """
        import levychaos.chaos       # pylint: disable=C0415
        import levychaos.chaos.poly  # pylint: disable=C0415

        (model, table) = _setup('single_atom_doc')
        plain   = levychaos.chaos.expand_increment_product(model, table, (2,))
        shifted = levychaos.chaos.expand_increment_product(model, table, (2,),
                                                           anchor = 0.5)
        assert shifted.f == plain.f
        assert len(shifted.terms) == len(plain.terms)
        assert shifted.anchor == sympy.Rational(1, 2)
        shift = levychaos.chaos.poly.time_var
        times = { shift(j): shift(j) - sympy.Rational(1, 2) for j in (1, 2) }
        for (before, after) in zip(plain.terms, shifted.terms):
            assert after.integrand == sympy.expand(
                                        before.integrand.xreplace(times))

    # -------------------------------------------------------------------------
    def it_limits_the_total_degree(self):
        """
        |k| > 3 is beyond the implemented capability.

        """
        import levychaos.chaos      # pylint: disable=C0415
        import levychaos.exception  # pylint: disable=C0415

        (model, table) = _setup('two_atom_doc')
        with pytest.raises(levychaos.exception.CapabilityError):
            levychaos.chaos.expand_increment_product(model, table, (2, 2))

    # -------------------------------------------------------------------------
    def it_needs_covering_moments(self):
        """
        A table without m_(1,1) cannot expand k = (1, 1).

        """
        import levychaos.chaos      # pylint: disable=C0415
        import levychaos.exception  # pylint: disable=C0415
        import levychaos.moments    # pylint: disable=C0415

        (model, _) = _setup('two_atom_doc', degree = 1)
        table = levychaos.moments.MomentTable.synthetic(
                                        2, { (1, 0): 2.5, (0, 1): 3.0 })
        with pytest.raises(levychaos.exception.CoverageError):
            levychaos.chaos.expand_increment_product(model, table, (1, 1))

    # -------------------------------------------------------------------------
    def it_checks_dimensions(self):
        """
        k must have the model dimension.

        """
        import levychaos.chaos      # pylint: disable=C0415
        import levychaos.exception  # pylint: disable=C0415

        (model, table) = _setup('two_atom_doc', degree = 1)
        with pytest.raises(levychaos.exception.DimensionError):
            levychaos.chaos.expand_increment_product(model, table, (1,))

    # -------------------------------------------------------------------------
    def it_survives_serialization(self):
        """
        The JSON form restores every exact term.

        """
        import levychaos.chaos              # pylint: disable=C0415
        import levychaos.chaos.predictable  # pylint: disable=C0415

        (model, table) = _setup('five_atom_doc')
        expansion = levychaos.chaos.expand_increment_product(model, table,
                                                             (2, 1))
        restored  = levychaos.chaos.ChaosExpansion.from_dict(
                                                    expansion.to_dict())
        assert restored.f == expansion.f
        assert (levychaos.chaos.predictable.term_multiset(restored)
                == levychaos.chaos.predictable.term_multiset(expansion))


# =============================================================================
class SpecifyToBasis:
    """
    Spec for the levychaos.chaos.to_basis function.

    """

    # -------------------------------------------------------------------------
    def it_rewrites_integrators_with_retained_elements(self, two_atom):
        """
        Every H integrator is a retained index.

        """
        import levychaos.chaos      # pylint: disable=C0415
        import levychaos.exception  # pylint: disable=C0415

        (model, table, basis) = two_atom
        expansion   = levychaos.chaos.expand_increment_product(model, table,
                                                               (1, 1))
        expansion_h = levychaos.chaos.to_basis(expansion, basis)
        assert expansion_h.basis == 'H'
        assert expansion_h.f == expansion.f
        for term in expansion_h.terms:
            assert all(p in basis.retained for p in term.integrators)
        sequences = expansion_h.integrator_sequences()
        assert len(sequences) == len(set(sequences))
        with pytest.raises(levychaos.exception.ParameterError):
            levychaos.chaos.to_basis(expansion_h, basis)
