# -*- coding: utf-8 -*-
"""
Module of functions for reading model documents in various formats.

"""


import json
import os.path

import toml
import yaml

from levychaos.cfg.exception import CfgError


# -----------------------------------------------------------------------------
def from_path(path_cfg):
    """
    Return configuration loaded from the specified path.

    """
    if path_cfg is None:
        return dict()

    if os.path.isfile(path_cfg):
        return from_filepath(path_cfg)

    raise CfgError('The specified model path does not exist: {path}'.format(
                                                            path = path_cfg))


# -----------------------------------------------------------------------------
def from_filepath(filepath_cfg):
    """
    Return configuration data loaded from the specified file path.

    """
    map_reader = {
        '.json': from_json_string,
        '.yaml': from_yaml_string,
        '.yml':  from_yaml_string,
        '.toml': from_toml_string,
    }
    for (str_ext, fcn_reader) in map_reader.items():
        if filepath_cfg.endswith(str_ext):
            with open(filepath_cfg, encoding = 'utf-8') as file_cfg:
                return fcn_reader(file_cfg.read(), filepath_cfg)
    raise CfgError('Did not recognize filename extension: {path}'.format(
                                                        path = filepath_cfg))


# -----------------------------------------------------------------------------
def from_json_string(str_json, filepath_cfg = 'memory'):
    """
    Return configuration data loaded from the specified JSON format string.

    Lines starting with // or # are treated as
    comments. They are blanked rather than removed
    so that reported line numbers match the file.

    """
    list_str_line = []
    for str_line in str_json.splitlines(keepends = True):
        str_line_naked = str_line.strip()
        if str_line_naked.startswith('//') or str_line_naked.startswith('#'):
            list_str_line.append('\n')
            continue
        list_str_line.append(str_line)
    try:
        return json.loads(''.join(list_str_line))
    except json.JSONDecodeError as err:
        raise CfgError(
            'Error reading file: {path} ({line}:{column})\n\n{msg}\n'.format(
                                                path   = filepath_cfg,
                                                line   = err.lineno,
                                                column = err.colno,
                                                msg    = err.msg)) from None


# -----------------------------------------------------------------------------
def from_yaml_string(str_yaml, filepath_cfg = 'memory'):
    """
    Return configuration data loaded from the specified YAML format string.

    """
    try:
        return yaml.load(str_yaml, Loader = yaml.SafeLoader)
    except yaml.YAMLError as err:
        if hasattr(err, 'problem_mark'):
            mark = err.problem_mark
            location = '({line}:{column})'.format(line   = mark.line   + 1,
                                                  column = mark.column + 1)
        else:
            location = ''
        raise CfgError(
                'Error reading file: {path} {loc}\n\n{msg}\n'.format(
                                                        path = filepath_cfg,
                                                        loc  = location,
                                                        msg  = str(err)))


# -----------------------------------------------------------------------------
def from_toml_string(str_toml, filepath_cfg = 'memory'):
    """
    Return configuration data loaded from the specified TOML format string.

    """
    try:
        return toml.loads(str_toml)
    except toml.TomlDecodeError as err:
        raise CfgError(
            'Error reading file: {path} ({line}:{column})\n\n{msg}\n'.format(
                                                path   = filepath_cfg,
                                                line   = err.lineno,
                                                column = err.colno,
                                                msg    = err.msg)) from None
