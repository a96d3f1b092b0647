# -*- coding: utf-8 -*-
"""
Functional specification for the levychaos.chaos.predictable module.

"""


# =============================================================================
class SpecifyPredictableForm:
    """
    Spec for levychaos.chaos.predictable.to_predictable_form.

    """

    # -------------------------------------------------------------------------
    def it_groups_terms_by_outer_integrator(self, two_atom):
        """
        Phi^e1 holds the deterministic 3t and the inner Y^e2 integral.

        """
        import levychaos.chaos              # pylint: disable=C0415
        import levychaos.chaos.poly         # pylint: disable=C0415
        import levychaos.chaos.predictable  # pylint: disable=C0415

        (model, table, _) = two_atom
        expansion = levychaos.chaos.expand_increment_product(model, table,
                                                             (1, 1))
        form = levychaos.chaos.predictable.to_predictable_form(expansion)
        assert [tuple(p) for p in form.outer_indices()] == [(1, 0), (0, 1),
                                                            (1, 1)]
        phi = { tuple(tuple(p) for p in inner): integrand
                for (inner, integrand) in form.phi((1, 0)) }
        assert phi == { (): 3 * levychaos.chaos.poly.TIME, ((0, 1),): 1 }
        assert form.phi((2, 0)) == []
        assert len(form.to_dict()['phi']) == 3

    # -------------------------------------------------------------------------
    def it_flattens_back_to_the_same_terms(self, two_atom):
        """
        Regrouping loses no term.

        """
        import levychaos.chaos              # pylint: disable=C0415
        import levychaos.chaos.predictable  # pylint: disable=C0415

        (model, table, basis) = two_atom
        for expansion in (
                levychaos.chaos.expand_increment_product(model, table, (2, 1)),
                levychaos.chaos.to_basis(
                    levychaos.chaos.expand_increment_product(model, table,
                                                             (1, 1)),
                    basis)):
            form = levychaos.chaos.predictable.to_predictable_form(expansion)
            flat = levychaos.chaos.predictable.flatten(form)
            assert flat.f == expansion.f
            assert flat.basis == expansion.basis
            assert (levychaos.chaos.predictable.term_multiset(flat)
                    == levychaos.chaos.predictable.term_multiset(expansion))
