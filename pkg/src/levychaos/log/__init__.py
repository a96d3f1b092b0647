# -*- coding: utf-8 -*-
"""
Module of utilities to support various logging operations.

"""


import os
import sys

import loguru


logger = loguru.logger


# -----------------------------------------------------------------------------
def setup(log_level   = 'WARNING',
          dirpath_log = None,
          id_command  = 'main'):
    """
    Configure the module level logger object.

    A stderr sink is always installed. When a
    log directory is given, a rotating file sink
    named after the running command is added too.

    """
    global logger  # pylint: disable=C0103,W0603
    logger.remove()
    logger.add(sys.stderr,
               level     = log_level,
               backtrace = False)

    if dirpath_log is not None:
        filename_log = 'levychaos_{cmd}.log'.format(cmd = id_command)
        filepath_log = os.path.join(dirpath_log, filename_log)
        logger.add(filepath_log,
                   rotation  = '100 MB',
                   level     = log_level,
                   backtrace = False)
