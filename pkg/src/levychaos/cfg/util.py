# -*- coding: utf-8 -*-
"""
Module of configuration related utility functions.

"""


from levychaos.cfg.exception import CfgError


# -----------------------------------------------------------------------------
def apply(data, address, value, delim_cfg_addr = '.'):
    """
    Apply a single configuration field override on the specified path.

    Address parts which address a list are
    interpreted as zero based integer positions,
    so 'drift.1' refers to the second drift entry.

    """
    addr_parts = address.split(delim_cfg_addr)
    subtree    = data

    for key in addr_parts[:-1]:
        if isinstance(subtree, list):
            subtree = subtree[_list_position(subtree, key, address)]
            continue
        if key not in subtree:
            subtree[key] = dict()
        subtree = subtree[key]

    key = addr_parts[-1]
    if isinstance(subtree, list):
        subtree[_list_position(subtree, key, address)] = value
    else:
        subtree[key] = value
    return data


# -----------------------------------------------------------------------------
def _list_position(subtree, key, address):
    """
    Return key as a valid position into the list subtree.

    """
    try:
        position = int(key)
    except ValueError:
        raise CfgError(
            'Expected a list position in "{addr}", got "{key}".'.format(
                                    addr = address, key = key)) from None
    if not -len(subtree) <= position < len(subtree):
        raise CfgError('List position out of range in "{addr}".'.format(
                                                            addr = address))
    return position
