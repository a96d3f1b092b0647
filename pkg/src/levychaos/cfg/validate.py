# -*- coding: utf-8 -*-
"""
Module of functions for validating model documents and run configurations.

"""


import jsonschema

import levychaos.cfg.exception


KINDS_JUMPS = ('discrete',
               'marginal_copula',
               'gamma_copula',
               'negative_multinomial',
               'meixner_copula')

KINDS_VERIFY = ('orth', 'crp', 'moments')


# -----------------------------------------------------------------------------
def model(doc):
    """
    Validate a model document.

    """
    _validate_with_schema(doc, _model_schema())
    _check_model_consistency(doc)
    return doc


# -----------------------------------------------------------------------------
def run(cfg):
    """
    Validate a resolved run configuration.

    """
    _validate_with_schema(cfg, _run_schema())
    _check_model_consistency(cfg['model'])
    return cfg


# -----------------------------------------------------------------------------
def _validate_with_schema(cfg, schema):
    """
    Validate config using the specified schema.

    """
    try:
        jsonschema.validate(cfg, schema)
    except jsonschema.exceptions.ValidationError as err:
        path = '.'.join(str(part) for part in err.absolute_path)
        msg  = '\n\n{path}: {msg}\n\n'.format(path = path or '<root>',
                                              msg  = err.message)
        raise levychaos.cfg.exception.CfgError(msg) from None
    return cfg


# -----------------------------------------------------------------------------
def _definitions():
    """
    Return schema definitions shared by the model and run schemas.

    """
    return {
        'positive':      { 'type': 'number', 'exclusiveMinimum': 0 },
        'nonnegative':   { 'type': 'number', 'minimum': 0 },
        'vector':        { 'type': 'array',
                           'items': { 'type': 'number' } },
        'pos_vector':    { 'type': 'array',
                           'items': { '$ref': '#/definitions/positive' },
                           'minItems': 1 },
        'matrix':        { 'type': 'array',
                           'items': { '$ref': '#/definitions/vector' } },
        'theta':         { '$ref': '#/definitions/positive' },
        'eta':           { 'type': 'number', 'minimum': 0, 'maximum': 1 },
        'atom': {
            'type': 'object',
            'properties': {
                'x':    { '$ref': '#/definitions/vector' },
                'rate': { '$ref': '#/definitions/positive' }
            },
            'required': ['x', 'rate'],
            'additionalProperties': False
        },
        'marginal': {
            'oneOf': [
                {
                    'type': 'object',
                    'properties': {
                        'family': { 'const': 'gamma' },
                        'gamma':  { '$ref': '#/definitions/positive' },
                        'lambda': { '$ref': '#/definitions/positive' }
                    },
                    'required': ['family', 'gamma', 'lambda'],
                    'additionalProperties': False
                },
                {
                    'type': 'object',
                    'properties': {
                        'family': { 'const': 'meixner' },
                        'm':      { '$ref': '#/definitions/positive' },
                        'a':      { 'type': 'number' }
                    },
                    'required': ['family', 'm', 'a'],
                    'additionalProperties': False
                },
                {
                    'type': 'object',
                    'properties': {
                        'family':    { 'const': 'exponential' },
                        'intensity': { '$ref': '#/definitions/positive' },
                        'rate':      { '$ref': '#/definitions/positive' }
                    },
                    'required': ['family', 'intensity', 'rate'],
                    'additionalProperties': False
                }
            ]
        },
        'jumps': {
            'oneOf': [
                {
                    'type': 'object',
                    'properties': {
                        'kind':  { 'const': 'discrete' },
                        'atoms': { 'type': 'array',
                                   'items': { '$ref': '#/definitions/atom' } }
                    },
                    'required': ['kind', 'atoms'],
                    'additionalProperties': False
                },
                {
                    'type': 'object',
                    'properties': {
                        'kind':      { 'const': 'marginal_copula' },
                        'marginals': { 'type': 'array',
                                       'items': {
                                         '$ref': '#/definitions/marginal' },
                                       'minItems': 1 },
                        'theta':     { '$ref': '#/definitions/theta' },
                        'eta':       { '$ref': '#/definitions/eta' }
                    },
                    'required': ['kind', 'marginals', 'theta', 'eta'],
                    'additionalProperties': False
                },
                {
                    'type': 'object',
                    'properties': {
                        'kind':   { 'const': 'gamma_copula' },
                        'gamma':  { '$ref': '#/definitions/pos_vector' },
                        'lambda': { '$ref': '#/definitions/pos_vector' },
                        'theta':  { '$ref': '#/definitions/theta' },
                        'eta':    { '$ref': '#/definitions/eta' }
                    },
                    'required': ['kind', 'gamma', 'lambda', 'theta', 'eta'],
                    'additionalProperties': False
                },
                {
                    'type': 'object',
                    'properties': {
                        'kind':     { 'const': 'negative_multinomial' },
                        'lambda':   { 'type': 'number',
                                      'exclusiveMinimum': 0,
                                      'exclusiveMaximum': 1 },
                        'mu':       { '$ref': '#/definitions/positive' },
                        'lambda_i': { '$ref': '#/definitions/pos_vector' }
                    },
                    'required': ['kind', 'lambda', 'mu', 'lambda_i'],
                    'additionalProperties': False
                },
                {
                    'type': 'object',
                    'properties': {
                        'kind':  { 'const': 'meixner_copula' },
                        'm':     { '$ref': '#/definitions/pos_vector' },
                        'a':     { '$ref': '#/definitions/vector' },
                        'theta': { '$ref': '#/definitions/theta' },
                        'eta':   { '$ref': '#/definitions/eta' }
                    },
                    'required': ['kind', 'm', 'a', 'theta', 'eta'],
                    'additionalProperties': False
                }
            ]
        },
        'model': {
            'type': 'object',
            'properties': {
                'n':          { 'type': 'integer', 'minimum': 1 },
                'drift':      { '$ref': '#/definitions/vector' },
                'sigma':      { '$ref': '#/definitions/matrix' },
                'jumps':      { '$ref': '#/definitions/jumps' },
                'truncation': { 'oneOf': [
                                    { '$ref': '#/definitions/positive' },
                                    { 'type': 'null' } ] },
                'compensate_truncation': { 'type': 'boolean' },
                'hypothesis1': {
                    'type': 'object',
                    'properties': {
                        'lambda':  { '$ref': '#/definitions/positive' },
                        'epsilon': { '$ref': '#/definitions/positive' }
                    },
                    'additionalProperties': False
                }
            },
            'required': ['n', 'drift', 'sigma', 'jumps'],
            'additionalProperties': False
        }
    }


# -----------------------------------------------------------------------------
def _model_schema():
    """
    Return a schema for model documents.

    """
    return {
        '$schema':     'http://json-schema.org/draft-07/schema#',
        'definitions': _definitions(),
        '$ref':        '#/definitions/model'
    }


# -----------------------------------------------------------------------------
def _run_schema():
    """
    Return a schema for resolved run configurations.

    """
    maybe_positive = { 'oneOf': [ { '$ref': '#/definitions/positive' },
                                  { 'type': 'null' } ] }
    return {
        '$schema':     'http://json-schema.org/draft-07/schema#',
        'definitions': _definitions(),
        'type':        'object',
        'properties': {
            'command': { 'enum': ['inspect', 'gram', 'orthogonalize',
                                  'simulate', 'verify'] },
            'model':   { '$ref': '#/definitions/model' },
            'seed':    { 'type': 'integer', 'minimum': 0 },
            'params': {
                'type': 'object',
                'properties': {
                    'degree':     { 'type': 'integer', 'minimum': 1 },
                    'horizon':    { '$ref': '#/definitions/positive' },
                    'trunc':      maybe_positive,
                    'compensate': { 'type': ['boolean', 'null'] },
                    'dt':         { '$ref': '#/definitions/positive' },
                    'paths':      { 'type': 'integer', 'minimum': 2 },
                    'tol':        { '$ref': '#/definitions/positive' },
                    'lam':        maybe_positive,
                    'kind':       { 'enum': list(KINDS_VERIFY) }
                },
                'required': ['degree', 'horizon', 'dt', 'paths', 'tol'],
                'additionalProperties': False
            },
            'runtime': {
                'type': 'object',
                'properties': {
                    'threads':     { 'type': 'integer', 'minimum': 1 },
                    'dirpath_out': { 'type': ['string', 'null'] },
                    'log_level':   { 'enum': ['TRACE', 'DEBUG', 'INFO',
                                              'SUCCESS', 'WARNING',
                                              'ERROR', 'CRITICAL'] }
                },
                'required': ['threads'],
                'additionalProperties': False
            }
        },
        'required': ['command', 'model', 'seed', 'params', 'runtime'],
        'additionalProperties': False
    }


# -----------------------------------------------------------------------------
def _check_model_consistency(doc):
    """
    Raise an exception if a model document is internally inconsistent.

    """
    _check_shapes(doc)
    _check_jump_dimensions(doc)


# -----------------------------------------------------------------------------
def _check_shapes(doc):
    """
    Raise an exception if drift or sigma do not match the dimension n.

    """
    num_dim = doc['n']
    if len(doc['drift']) != num_dim:
        raise levychaos.cfg.exception.CfgError(
            'drift has {num} entries but n = {n}.'.format(
                                        num = len(doc['drift']), n = num_dim))
    sigma = doc['sigma']
    if len(sigma) != num_dim or any(len(row) != num_dim for row in sigma):
        raise levychaos.cfg.exception.CfgError(
            'sigma must be a {n}x{n} matrix.'.format(n = num_dim))


# -----------------------------------------------------------------------------
def _check_jump_dimensions(doc):
    """
    Raise an exception if jump measure parameters do not match n.

    """
    num_dim = doc['n']
    jumps   = doc['jumps']
    kind    = jumps['kind']

    if kind == 'discrete':
        for atom in jumps['atoms']:
            if len(atom['x']) != num_dim:
                raise levychaos.cfg.exception.CfgError(
                    'Atom {x} does not have dimension {n}.'.format(
                                                    x = atom['x'], n = num_dim))
        return

    map_keys = {
        'marginal_copula':      ('marginals',),
        'gamma_copula':         ('gamma', 'lambda'),
        'negative_multinomial': ('lambda_i',),
        'meixner_copula':       ('m', 'a'),
    }
    for key in map_keys[kind]:
        if len(jumps[key]) != num_dim:
            raise levychaos.cfg.exception.CfgError(
                'jumps.{key} has {num} entries but n = {n}.'.format(
                                key = key, num = len(jumps[key]), n = num_dim))
