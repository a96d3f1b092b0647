# -*- coding: utf-8 -*-
"""
Functional specification for the levychaos.cfg.override module.

"""


import copy

import pytest


# =============================================================================
class SpecifyApply:
    """
    Spec for the levychaos.cfg.override.apply function.

    """

    # -------------------------------------------------------------------------
    def it_changes_nothing_when_no_override_is_given(self, model_doc):
        """
        apply leaves the document alone for an empty override.

        """
        import levychaos.cfg.override  # pylint: disable=C0415

        orig = copy.deepcopy(model_doc)
        assert levychaos.cfg.override.apply(model_doc, None) == orig
        assert levychaos.cfg.override.apply(model_doc, ()) == orig

    # -------------------------------------------------------------------------
    def it_parses_values_as_yaml_scalars(self, model_doc):
        """
        Override values keep their natural types.

        """
        import levychaos.cfg.override  # pylint: disable=C0415

        cfg = levychaos.cfg.override.apply(
                            model_doc, ('jumps.atoms.0.rate', '1.5',
                                        'sigma.0',           '[1.0, 0.0]'))
        assert cfg['jumps']['atoms'][0]['rate'] == 1.5
        assert cfg['sigma'][0]                  == [1.0, 0.0]

    # -------------------------------------------------------------------------
    def it_honours_a_custom_delimiter(self, model_doc):
        """
        The address delimiter is configurable.

        """
        import levychaos.cfg.override  # pylint: disable=C0415

        cfg = levychaos.cfg.override.apply(model_doc, ('drift:0', '2'),
                                           delim_cfg_addr = ':')
        assert cfg['drift'] == [2, 0.0]

    # -------------------------------------------------------------------------
    def it_rejects_an_odd_number_of_tokens(self, model_doc):
        """
        Overrides come in address value pairs.

        """
        import levychaos.cfg.exception  # pylint: disable=C0415
        import levychaos.cfg.override   # pylint: disable=C0415

        with pytest.raises(levychaos.cfg.exception.CfgError):
            levychaos.cfg.override.apply(model_doc, ('drift.0',))

    # -------------------------------------------------------------------------
    def it_rejects_bad_list_positions(self, model_doc):
        """
        List addresses must be integer positions in range.

        """
        import levychaos.cfg.exception  # pylint: disable=C0415
        import levychaos.cfg.override   # pylint: disable=C0415

        with pytest.raises(levychaos.cfg.exception.CfgError):
            levychaos.cfg.override.apply(model_doc, ('drift.first', '1'))
        with pytest.raises(levychaos.cfg.exception.CfgError):
            levychaos.cfg.override.apply(model_doc, ('drift.5', '1'))
