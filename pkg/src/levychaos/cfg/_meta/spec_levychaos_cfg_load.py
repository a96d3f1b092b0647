# -*- coding: utf-8 -*-
"""
Functional specification for the levychaos.cfg.load module.

"""


import pytest


# =============================================================================
class SpecifyFromPath:
    """
    Spec for the levychaos.cfg.load.from_path function.

    """

    # -------------------------------------------------------------------------
    def it_loads_json_and_yaml_alike(self,
                                     model_doc,
                                     filepath_model_json,
                                     filepath_model_yaml):
        """
        JSON and YAML documents load to the same dict.

        """
        import levychaos.cfg.load  # pylint: disable=C0415

        assert levychaos.cfg.load.from_path(filepath_model_json) == model_doc
        assert levychaos.cfg.load.from_path(filepath_model_yaml) == model_doc

    # -------------------------------------------------------------------------
    def it_reports_line_and_column_of_json_errors(
                                            self, filepath_model_malformed):
        """
        A malformed JSON document raises CfgError naming the position.

        """
        import levychaos.cfg.exception  # pylint: disable=C0415
        import levychaos.cfg.load       # pylint: disable=C0415

        with pytest.raises(levychaos.cfg.exception.CfgError) as info:
            levychaos.cfg.load.from_path(filepath_model_malformed)
        assert '(3:' in str(info.value)

    # -------------------------------------------------------------------------
    def it_rejects_a_missing_path(self, tmp_path):
        """
        A path that does not exist raises CfgError.

        """
        import levychaos.cfg.exception  # pylint: disable=C0415
        import levychaos.cfg.load       # pylint: disable=C0415

        with pytest.raises(levychaos.cfg.exception.CfgError):
            levychaos.cfg.load.from_path(str(tmp_path / 'absent.json'))


# =============================================================================
class SpecifyFromJsonString:
    """
    Spec for the levychaos.cfg.load.from_json_string function.

    """

    # -------------------------------------------------------------------------
    def it_skips_comment_lines(self):
        """
        Lines starting with // or # are ignored.

        """
        import levychaos.cfg.load  # pylint: disable=C0415

        text = '// comment\n{\n# another\n"n": 1\n}\n'
        assert levychaos.cfg.load.from_json_string(text) == { 'n': 1 }


# =============================================================================
class SpecifyFromTomlString:
    """
    Spec for the levychaos.cfg.load.from_toml_string function.

    """

    # -------------------------------------------------------------------------
    def it_loads_toml_documents(self):
        """
        TOML documents load to nested dicts.

        """
        import levychaos.cfg.load  # pylint: disable=C0415

        text = 'n = 1\ndrift = [0.5]\n[jumps]\nkind = "discrete"\n'
        data = levychaos.cfg.load.from_toml_string(text)
        assert data['drift']         == [0.5]
        assert data['jumps']['kind'] == 'discrete'
