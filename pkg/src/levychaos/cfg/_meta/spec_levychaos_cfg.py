# -*- coding: utf-8 -*-
"""
Functional specification for the levychaos.cfg package.

"""


import pytest


# =============================================================================
class SpecifyPrepare:
    """
    Spec for the levychaos.cfg.prepare function.

    """

    # -------------------------------------------------------------------------
    def it_returns_a_validated_run_config(self, filepath_model_json):
        """
        levychaos.cfg.prepare fills defaults around the loaded model.

        """
        import levychaos.cfg  # pylint: disable=C0415

        cfg = levychaos.cfg.prepare(command    = 'gram',
                                    path_model = filepath_model_json,
                                    params     = { 'degree': 3 },
                                    seed       = 7)
        assert cfg['command']           == 'gram'
        assert cfg['seed']              == 7
        assert cfg['params']['degree']  == 3
        assert cfg['params']['horizon'] == 1.0
        assert cfg['model']['n']        == 2
        assert 'kind' not in cfg['params']

    # -------------------------------------------------------------------------
    def it_defaults_the_verify_kind_to_orth(self, filepath_model_yaml):
        """
        levychaos.cfg.prepare selects the orth check when no kind is given.

        """
        import levychaos.cfg  # pylint: disable=C0415

        cfg = levychaos.cfg.prepare(command    = 'verify',
                                    path_model = filepath_model_yaml,
                                    seed       = 0)
        assert cfg['params']['kind'] == 'orth'

    # -------------------------------------------------------------------------
    def it_records_an_entropy_seed_when_none_is_given(
                                                    self, filepath_model_json):
        """
        levychaos.cfg.prepare picks a nonnegative integer seed.

        """
        import levychaos.cfg  # pylint: disable=C0415

        cfg = levychaos.cfg.prepare(command    = 'inspect',
                                    path_model = filepath_model_json)
        assert isinstance(cfg['seed'], int)
        assert cfg['seed'] >= 0

    # -------------------------------------------------------------------------
    def it_applies_overrides_and_truncation(self, filepath_model_json):
        """
        Overrides and --trunc both end up in the model document.

        """
        import levychaos.cfg  # pylint: disable=C0415

        cfg = levychaos.cfg.prepare(command       = 'inspect',
                                    path_model    = filepath_model_json,
                                    params        = { 'trunc': 0.5 },
                                    seed          = 1,
                                    tup_overrides = ('drift.1', '0.25'))
        assert cfg['model']['drift']      == [0.0, 0.25]
        assert cfg['model']['truncation'] == 0.5
        assert 'compensate_truncation' not in cfg['model']

    # -------------------------------------------------------------------------
    def it_sets_small_jump_compensation(self, filepath_model_json):
        """
        The compensate parameter sets compensate_truncation on the model.

        """
        import levychaos.cfg  # pylint: disable=C0415

        cfg = levychaos.cfg.prepare(command    = 'simulate',
                                    path_model = filepath_model_json,
                                    params     = { 'trunc':      0.5,
                                                   'compensate': True },
                                    seed       = 1)
        assert cfg['model']['compensate_truncation'] is True
        assert cfg['params']['compensate'] is True

    # -------------------------------------------------------------------------
    def it_requires_a_model(self):
        """
        levychaos.cfg.prepare raises CfgError without any model source.

        """
        import levychaos.cfg  # pylint: disable=C0415

        with pytest.raises(levychaos.cfg.CfgError):
            levychaos.cfg.prepare(command = 'inspect', seed = 0)

    # -------------------------------------------------------------------------
    def it_rejects_out_of_range_parameters(self, filepath_model_json):
        """
        levychaos.cfg.prepare rejects a nonpositive horizon.

        """
        import levychaos.cfg  # pylint: disable=C0415

        with pytest.raises(levychaos.cfg.CfgError):
            levychaos.cfg.prepare(command    = 'simulate',
                                  path_model = filepath_model_json,
                                  params     = { 'horizon': -1.0 },
                                  seed       = 0)


# =============================================================================
class SpecifyEmbedded:
    """
    Spec for the levychaos.cfg.embedded function.

    """

    # -------------------------------------------------------------------------
    def it_leaves_out_runtime_settings(self, filepath_model_json):
        """
        Reports do not depend on thread count or output directory.

        """
        import levychaos.cfg  # pylint: disable=C0415

        first  = levychaos.cfg.prepare(command    = 'gram',
                                       path_model = filepath_model_json,
                                       seed       = 3,
                                       threads    = 1)
        second = levychaos.cfg.prepare(command     = 'gram',
                                       path_model  = filepath_model_json,
                                       seed        = 3,
                                       threads     = 4,
                                       dirpath_out = 'somewhere')
        assert 'runtime' not in levychaos.cfg.embedded(first)
        assert (levychaos.cfg.embedded(first)
                == levychaos.cfg.embedded(second))


# =============================================================================
class SpecifyMergeDicts:
    """
    Spec for the levychaos.cfg.merge_dicts function.

    """

    # -------------------------------------------------------------------------
    def it_gives_priority_to_the_second_argument(self):
        """
        Nested keys from the second dict win.

        """
        import levychaos.cfg  # pylint: disable=C0415

        merged = levychaos.cfg.merge_dicts({ 'a': { 'b': 1, 'c': 2 } },
                                           { 'a': { 'b': 3 }, 'd': 4 })
        assert merged == { 'a': { 'b': 3, 'c': 2 }, 'd': 4 }
