# -*- coding: utf-8 -*-
"""
Module for configuration override logic.

Overrides are given on the command line as
alternating address value pairs. Values are
parsed as YAML scalars so that numbers and
lists arrive with their natural types.

"""


import levychaos.cfg.load
import levychaos.cfg.util

from levychaos.cfg.exception import CfgError


# -----------------------------------------------------------------------------
def apply(cfg, tup_overrides = None, delim_cfg_addr = '.'):
    """
    Apply all specified configuration field overrides.

    """
    if not tup_overrides:
        return cfg

    if len(tup_overrides) % 2 != 0:
        raise CfgError(
            'Overrides must be given as address value pairs.')

    for (address, value) in zip(tup_overrides[::2], tup_overrides[1::2]):
        cfg = levychaos.cfg.util.apply(
                    data           = cfg,
                    address        = address,
                    value          = _parse_value(value),
                    delim_cfg_addr = delim_cfg_addr)

    return cfg


# -----------------------------------------------------------------------------
def _parse_value(value):
    """
    Return the override value parsed as a YAML scalar.

    """
    if not isinstance(value, str):
        return value
    return levychaos.cfg.load.from_yaml_string(str_yaml     = value,
                                               filepath_cfg = 'override')
