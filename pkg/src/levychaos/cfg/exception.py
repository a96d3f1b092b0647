# -*- coding: utf-8 -*-
"""
Logic for exceptions in levychaos configuration handling.

"""


import levychaos.exception


# =============================================================================
class CfgError(levychaos.exception.LevyChaosError):
    """
    Base class for custom exceptions used for levychaos configuration errors.

    """
