# -*- coding: utf-8 -*-
"""
Functional specification for the levychaos.chaos.poly module.

"""


import sympy


# =============================================================================
class SpecifyExact:
    """
    Spec for the levychaos.chaos.poly.exact function.

    """

    # -------------------------------------------------------------------------
    def it_converts_binary_floats_exactly(self):
        """
        Floats become the rational they represent.

        """
        import levychaos.chaos.poly  # pylint: disable=C0415

        assert levychaos.chaos.poly.exact(0.5) == sympy.Rational(1, 2)
        assert levychaos.chaos.poly.exact(3) == sympy.Integer(3)
        assert float(levychaos.chaos.poly.exact(0.1)) == 0.1


# =============================================================================
class SpecifyTimeIntegration:
    """
    Spec for the integrand transformations of levychaos.chaos.poly.

    """

    # -------------------------------------------------------------------------
    def it_renames_the_upper_limit_to_a_new_outer_time(self):
        """
        t becomes t_1 and t_j becomes t_(j+1).

        """
        import levychaos.chaos.poly as poly  # pylint: disable=C0415

        expr = poly.TIME * poly.time_var(1)
        assert poly.push_inside(expr, 1) == poly.time_var(1) * poly.time_var(2)

    # -------------------------------------------------------------------------
    def it_integrates_from_the_outer_time(self):
        """
        int_(t_1)^t t_1 du = t t_1 - t_1^2.

        """
        import levychaos.chaos.poly as poly  # pylint: disable=C0415

        (t, t_1) = poly.variables(1)
        assert poly.integrate_time(sympy.Integer(1), 0) == t
        assert poly.integrate_time(t_1, 1) == sympy.expand(t * t_1 - t_1 ** 2)

    # -------------------------------------------------------------------------
    def it_shifts_integration_times_by_the_anchor(self):
        """
        Relative times are measured from the anchor.

        """
        import levychaos.chaos.poly as poly  # pylint: disable=C0415

        (t, t_1) = poly.variables(1)
        shifted  = poly.shift_anchor(t * t_1, 1, 0.5)
        assert shifted == sympy.expand(t * (t_1 - sympy.Rational(1, 2)))
        assert poly.shift_anchor(t_1, 1, 0) == t_1


# =============================================================================
class SpecifySparseForm:
    """
    Spec for the sparse and JSON forms of levychaos.chaos.poly.

    """

    # -------------------------------------------------------------------------
    def it_reports_total_degree(self):
        """
        The zero polynomial has degree -1.

        """
        import levychaos.chaos.poly as poly  # pylint: disable=C0415

        (t, t_1, t_2) = poly.variables(2)
        assert poly.total_degree(t * t_1 ** 2 + t_2, 2) == 3
        assert poly.total_degree(sympy.Integer(0), 2) == -1

    # -------------------------------------------------------------------------
    def it_evaluates_the_window_length(self):
        """
        Powers of t fold into the coefficients.

        """
        import levychaos.chaos.poly as poly  # pylint: disable=C0415

        (t, t_1) = poly.variables(1)
        assert poly.numeric_monomials(t * t_1 + 2, 1, 3.0) == [((0,), 2.0),
                                                               ((1,), 3.0)]

    # -------------------------------------------------------------------------
    def it_keeps_rationals_exact_in_json(self):
        """
        Rational coefficients are stored as strings.

        """
        import levychaos.chaos.poly as poly  # pylint: disable=C0415

        (t, t_1) = poly.variables(1)
        expr = sympy.Rational(15, 2) * t ** 2 + 3 * t_1
        data = poly.to_json(expr, 1)
        assert [1, 0] not in [exps for (exps, _) in data]
        assert ['15/2'] == [coef for (exps, coef) in data if exps == [2, 0]]
        assert poly.from_json(data, 1) == expr
