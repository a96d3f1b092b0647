# -*- coding: utf-8 -*-
"""
Functional specification for the levychaos.cfg.validate module.

"""


import pytest


# =============================================================================
class SpecifyModel:
    """
    Spec for the levychaos.cfg.validate.model function.

    """

    # -------------------------------------------------------------------------
    @pytest.mark.parametrize('name', ['two_atom_doc',
                                      'five_atom_doc',
                                      'three_dim_doc',
                                      'brownian_doc',
                                      'gamma_copula_doc',
                                      'exponential_copula_doc',
                                      'meixner_copula_doc',
                                      'negmult_doc'])
    def it_accepts_the_standard_models(self, name):
        """
        Every standard model document validates.

        """
        import levychaos.cfg.validate  # pylint: disable=C0415
        import levychaos.test.util     # pylint: disable=C0415

        doc = getattr(levychaos.test.util, name)()
        assert levychaos.cfg.validate.model(doc) is doc

    # -------------------------------------------------------------------------
    def it_rejects_unknown_jump_kinds(self, model_doc):
        """
        An unknown jumps.kind is a configuration error.

        """
        import levychaos.cfg.exception  # pylint: disable=C0415
        import levychaos.cfg.validate   # pylint: disable=C0415

        model_doc['jumps']['kind'] = 'stable'
        with pytest.raises(levychaos.cfg.exception.CfgError):
            levychaos.cfg.validate.model(model_doc)

    # -------------------------------------------------------------------------
    def it_rejects_mismatched_shapes(self, model_doc):
        """
        drift, sigma and atoms must match n.

        """
        import levychaos.cfg.exception  # pylint: disable=C0415
        import levychaos.cfg.validate   # pylint: disable=C0415

        model_doc['drift'] = [0.0, 0.0, 0.0]
        with pytest.raises(levychaos.cfg.exception.CfgError):
            levychaos.cfg.validate.model(model_doc)

    # -------------------------------------------------------------------------
    def it_rejects_an_eta_outside_the_unit_interval(self):
        """
        The copula mixing parameter eta lies in [0, 1].

        """
        import levychaos.cfg.exception  # pylint: disable=C0415
        import levychaos.cfg.validate   # pylint: disable=C0415
        import levychaos.test.util      # pylint: disable=C0415

        doc = levychaos.test.util.gamma_copula_doc()
        doc['jumps']['eta'] = 1.5
        with pytest.raises(levychaos.cfg.exception.CfgError):
            levychaos.cfg.validate.model(doc)
