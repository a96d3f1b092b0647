# -*- coding: utf-8 -*-
"""
Package of command implementations behind the levychaos CLI.

Each cmd_* function takes a validated RunConfig
(see levychaos.cfg.prepare), writes its report and
side outputs, and returns the process exit code.
Reports are JSON documents that embed the resolved
configuration and seed, so every number can be
replayed. They go to stdout and, if an output
directory is configured, to <out>/<command>.json.

"""


import math
import os

import numpy

import levychaos.cfg
import levychaos.chaos.verify
import levychaos.log
import levychaos.model
import levychaos.moments
import levychaos.multiindex
import levychaos.orthobasis
import levychaos.simulate
import levychaos.simulate.montecarlo
import levychaos.simulate.verify
import levychaos.util.serialization


DEFAULT_LAMBDA  = 1.0
DEFAULT_EPSILON = 1.0
K_MAX_VERIFY    = 3


# -----------------------------------------------------------------------------
def _json_number(value):
    """
    Return value, or 'inf' if it is not finite.

    """
    if value is None or math.isfinite(value):
        return value
    return 'inf'


# -----------------------------------------------------------------------------
def _outpath(cfg, filename):
    """
    Return the path of an output file, or None without an output directory.

    """
    dirpath = cfg['runtime']['dirpath_out']
    if dirpath is None:
        return None
    return os.path.join(dirpath, filename)


# -----------------------------------------------------------------------------
def _finish(cfg, report):
    """
    Embed the config into the report, emit it and return exit code 0.

    """
    report = dict(report)
    report['config'] = levychaos.cfg.embedded(cfg)
    text = levychaos.util.serialization.to_json(report)
    print(text, end = '')
    filepath = _outpath(cfg, '{cmd}.json'.format(cmd = cfg['command']))
    if filepath is not None:
        levychaos.util.serialization.write_json(filepath, report)
    levychaos.log.logger.info('Command {cmd} done', cmd = cfg['command'])
    return 0


# -----------------------------------------------------------------------------
def _model(cfg):
    """
    Return the LevyModel of a RunConfig.

    """
    return levychaos.model.from_dict(cfg['model'])


# -----------------------------------------------------------------------------
def _dt(cfg, model):
    """
    Return the grid step if the model needs one.

    """
    return cfg['params']['dt'] if model.has_brownian else None


# -----------------------------------------------------------------------------
def _hypothesis1_args(cfg, model):
    """
    Return (lambda, epsilon) for the exponential moment check.

    """
    block = cfg['model'].get('hypothesis1', dict())
    lam   = cfg['params'].get('lam') or block.get('lambda', DEFAULT_LAMBDA)
    eps   = block.get('epsilon', model.truncation or DEFAULT_EPSILON)
    return (lam, eps)


# -----------------------------------------------------------------------------
def cmd_inspect(cfg):
    """
    Report dimension, activity class and the exponential moment check.

    """
    model      = _model(cfg)
    (lam, eps) = _hypothesis1_args(cfg, model)
    check      = levychaos.model.check_hypothesis1(model, lam, eps)
    report = { 'fingerprint':     model.fingerprint,
               'n':               model.n,
               'has_brownian':    model.has_brownian,
               'activity_class':  model.activity_class(),
               'total_intensity': _json_number(model.total_intensity()),
               'truncation':      model.truncation,
               'compensated':     model.compensate_truncation,
               'drift':           model.effective_drift.tolist(),
               'hypothesis1':     check.to_dict() }
    return _finish(cfg, report)


# -----------------------------------------------------------------------------
def _table_and_gram(cfg, model):
    """
    Return (table, gram, indices) for the configured degree.

    """
    degree = cfg['params']['degree']
    table  = levychaos.moments.moment_table(model, degree)
    (gram, indices) = levychaos.orthobasis.gram_matrix(table, model.sigma,
                                                       degree)
    return (table, gram, indices)


# -----------------------------------------------------------------------------
def _write_gram(cfg, gram, indices):
    """
    Write the Gram matrix CSV if an output directory is configured.

    """
    filepath = _outpath(cfg, 'gram.csv')
    if filepath is None:
        return
    labels = [levychaos.util.serialization.canonical_json(p.to_json())
              for p in indices]
    rows   = [[p.to_json()] + list(row) for (p, row) in zip(indices, gram)]
    levychaos.util.serialization.write_csv(filepath, ['index'] + labels, rows)


# -----------------------------------------------------------------------------
def cmd_gram(cfg):
    """
    Compute the moment table and the Gram matrix.

    """
    model = _model(cfg)
    (table, gram, indices) = _table_and_gram(cfg, model)
    _write_gram(cfg, gram, indices)
    filepath = _outpath(cfg, 'moments.csv')
    if filepath is not None:
        levychaos.moments.write_csv(table, filepath)
    report = { 'fingerprint': model.fingerprint,
               'indices':     [p.to_json() for p in indices],
               'gram':        gram.tolist(),
               'moments':     [list(row) for row in table.rows()] }
    return _finish(cfg, report)


# -----------------------------------------------------------------------------
def cmd_orthogonalize(cfg):
    """
    Build the orthogonal martingale basis and its certificate.

    """
    model = _model(cfg)
    (table, gram, indices) = _table_and_gram(cfg, model)
    basis = levychaos.orthobasis.orthogonalize(gram, indices,
                                               fingerprint = table.fingerprint)
    certificate = levychaos.orthobasis.certificate(basis, gram)
    _write_gram(cfg, gram, indices)
    filepath = _outpath(cfg, 'basis.json')
    if filepath is not None:
        levychaos.orthobasis.write_json(basis, filepath)
        levychaos.orthobasis.write_csv(basis, _outpath(cfg, 'basis.csv'))
    levychaos.log.logger.info(
        'Certificate: max offdiag {off:.3g}, max diag {dia:.3g}',
        off = certificate['max_offdiag'], dia = certificate['max_diag'])
    report = { 'fingerprint': model.fingerprint,
               'basis':       basis.to_dict(),
               'certificate': certificate }
    return _finish(cfg, report)


# -----------------------------------------------------------------------------
def cmd_simulate(cfg):
    """
    Simulate paths, summarize them and write path CSVs.

    """
    model   = _model(cfg)
    params  = cfg['params']
    horizon = params['horizon']
    dt      = _dt(cfg, model)

    def functional(path):
        state = levychaos.simulate.process_value(path, horizon)
        return numpy.concatenate([[path.num_jumps], state])

    estimate = levychaos.simulate.montecarlo.mc_expectation(
                            model, functional, params['paths'], cfg['seed'],
                            horizon = horizon, dt = dt,
                            threads = cfg['runtime']['threads'])

    dirpath = _outpath(cfg, 'paths')
    if dirpath is not None:
        for stream in range(params['paths']):
            path = levychaos.simulate.simulate_path(
                        model, horizon, dt = dt, seed = cfg['seed'],
                        stream = stream)
            stem = os.path.join(dirpath, 'path_{i:06d}'.format(i = stream))
            levychaos.simulate.write_csv(path, stem + '_jumps.csv',
                                         stem + '_grid.csv')

    mean = numpy.asarray(estimate.mean)
    se   = numpy.asarray(estimate.se)
    report = { 'fingerprint':   model.fingerprint,
               'num_paths':     estimate.count,
               'jump_count':    { 'mean':     float(mean[0]),
                                  'se':       float(se[0]),
                                  'expected': _json_number(
                                        model.total_intensity() * horizon) },
               'terminal':      { 'mean':     mean[1:].tolist(),
                                  'se':       se[1:].tolist() } }
    return _finish(cfg, report)


# -----------------------------------------------------------------------------
def cmd_verify(cfg):
    """
    Run the orth, crp or moments verification.

    """
    model   = _model(cfg)
    params  = cfg['params']
    kind    = params['kind']
    common  = { 'num_paths': params['paths'],
                'seed':      cfg['seed'],
                'horizon':   params['horizon'],
                'dt':        _dt(cfg, model),
                'threads':   cfg['runtime']['threads'] }
    degree  = params['degree']
    table   = levychaos.moments.moment_table(model, degree)

    if kind == 'moments':
        report = levychaos.simulate.verify.verify_moments(
                        model, table, 2 * degree, **common)
        return _finish(cfg, report)

    (basis, _) = levychaos.orthobasis.build(table, degree)
    if kind == 'orth':
        report = levychaos.simulate.verify.verify_orthogonality(
                        model, basis, table, **common)
        return _finish(cfg, report)

    exact  = not model.has_brownian and model.is_finite_activity()
    mode   = 'exact' if exact else 'mc'
    checks = list()
    for k in levychaos.multiindex.enumerate_upto(model.n,
                                                 min(degree, K_MAX_VERIFY)):
        checks.append(levychaos.chaos.verify.verify_crp(
                        model, table, basis, k, mode,
                        tol = params['tol'], **common))
    report = { 'kind':   'crp',
               'mode':   mode,
               'checks': checks,
               'passed': all(check['passed'] for check in checks) }
    return _finish(cfg, report)


COMMANDS = { 'inspect':       cmd_inspect,
             'gram':          cmd_gram,
             'orthogonalize': cmd_orthogonalize,
             'simulate':      cmd_simulate,
             'verify':        cmd_verify }


# -----------------------------------------------------------------------------
def run(cfg):
    """
    Run the command named in the RunConfig and return its exit code.

    """
    return COMMANDS[cfg['command']](cfg)
