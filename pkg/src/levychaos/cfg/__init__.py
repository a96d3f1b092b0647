# -*- coding: utf-8 -*-
"""
Package of functions that assemble and validate run configurations.

A run configuration (RunConfig) is a plain dict
with the following top level fields:

    command  - Name of the command being run.
    model    - The resolved model document.
    params   - Numeric command parameters.
    seed     - The root seed for all randomness.
    runtime  - Worker count, output directory and
               log level. These fields do not affect
               results and are left out of reports.

"""


import copy

import numpy

import levychaos.cfg.exception
import levychaos.cfg.load
import levychaos.cfg.override
import levychaos.cfg.validate
import levychaos.log

from levychaos.cfg.exception import CfgError


DEFAULT_PARAMS = {
    'degree':     2,
    'horizon':    1.0,
    'trunc':      None,
    'compensate': None,
    'dt':         0.01,
    'paths':      1000,
    'tol':        1e-9,
    'lam':        None,
}


# -----------------------------------------------------------------------------
def prepare(command,  # pylint: disable=R0913
            path_model     = None,
            string_model   = None,
            params         = None,
            seed           = None,
            threads        = 1,
            dirpath_out    = None,
            log_level      = 'WARNING',
            delim_cfg_addr = '.',
            tup_overrides  = None):
    """
    Load the model, apply overrides and return a validated RunConfig.

    """
    has_model_file   = path_model is not None
    has_model_string = string_model is not None
    if not (has_model_file or has_model_string):
        raise CfgError('No model has been provided.')

    model = dict()
    if has_model_file:
        model = merge_dicts(model, levychaos.cfg.load.from_path(path_model))
    if has_model_string:
        from_string = levychaos.cfg.load.from_yaml_string(string_model)
        if not isinstance(from_string, dict):
            raise CfgError('The model string does not hold a mapping.')
        model = merge_dicts(model, from_string)

    model = levychaos.cfg.override.apply(cfg            = model,
                                         tup_overrides  = tup_overrides,
                                         delim_cfg_addr = delim_cfg_addr)

    resolved = dict(DEFAULT_PARAMS)
    for (key, value) in (params or dict()).items():
        if value is not None:
            resolved[key] = value
    if command != 'verify':
        resolved.pop('kind', None)
    elif 'kind' not in resolved:
        resolved['kind'] = 'orth'

    if resolved['trunc'] is not None:
        model['truncation'] = resolved['trunc']
    if resolved['compensate'] is not None:
        model['compensate_truncation'] = resolved['compensate']

    if seed is None:
        seed = int(numpy.random.SeedSequence().entropy)
        levychaos.log.logger.info('Selected entropy seed {seed}', seed = seed)

    cfg = {
        'command': command,
        'model':   model,
        'params':  resolved,
        'seed':    seed,
        'runtime': {
            'threads':     threads,
            'dirpath_out': dirpath_out,
            'log_level':   log_level,
        }
    }
    return levychaos.cfg.validate.run(cfg)


# -----------------------------------------------------------------------------
def embedded(cfg):
    """
    Return the part of a RunConfig that is embedded into reports.

    Runtime settings are excluded so that reports
    do not depend on worker count or output location.

    """
    return copy.deepcopy({ key: value for (key, value) in cfg.items()
                                      if key != 'runtime' })


# -----------------------------------------------------------------------------
def merge_dicts(first, second):
    """
    Merge two dictionaries. second takes priority.

    """
    return dict(_merge_dicts(first, second))


# -----------------------------------------------------------------------------
def _merge_dicts(first, second):
    """
    Merge two dictionaries (recursive function). second takes priority.

    """
    for key in sorted(set(first.keys()).union(second.keys())):
        _in_first  = key in first
        _in_second = key in second
        if _in_first and _in_second:
            _isdict_first  = isinstance(first[key], dict)
            _isdict_second = isinstance(second[key], dict)
            if _isdict_first and _isdict_second:
                yield (key, dict(_merge_dicts(first[key], second[key])))
            else:
                # second overwrites first if both are present.
                yield (key, second[key])
        elif _in_first:
            yield (key, first[key])
        else:
            yield (key, second[key])
