# -*- coding: utf-8 -*-
"""
Functional specification for the levychaos.log package.

"""


# =============================================================================
class SpecifySetup:
    """
    Spec for the levychaos.log.setup function.

    """

    # -------------------------------------------------------------------------
    def it_writes_a_log_file_per_command(self, tmp_path):
        """
        With a log directory, messages also go to levychaos_<cmd>.log.

        """
        import levychaos.log  # pylint: disable=C0415

        levychaos.log.setup(log_level   = 'INFO',
                            dirpath_log = str(tmp_path),
                            id_command  = 'gram')
        levychaos.log.logger.info('hello from the log test')
        levychaos.log.setup()
        text = (tmp_path / 'levychaos_gram.log').read_text()
        assert 'hello from the log test' in text
