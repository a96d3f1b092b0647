# -*- coding: utf-8 -*-
"""
Module of commands for the levychaos command line interface.

Argument parsing and the display of command line
help messages is implemented with the help of the
python click library.

    https://click.palletsprojects.com/en/7.x/

Note that the levychaos.cli.util.OrderedGroup
command class uses the order in which command
functions are defined in this file to determine
the order in which the corresponding help text
appears.

Since click throws away the return value of each
command function, every command makes an explicit
call to sys.exit() with the exit code of its run:

    0 - Success.
    1 - Unexpected failure.
    2 - Invalid configuration or input.
    3 - Numerical failure.
    4 - Request beyond implemented capability.

"""


import sys

import click

import levychaos.cli.util
import levychaos.log

_set_envvar = set()

levychaos.log.setup()


# -----------------------------------------------------------------------------
def _envvar(name):
    """
    Return the specified name with the common envvar prefix prepended.

    For example, if the string 'SEED' was given as
    input, the string 'LEVYCHAOS_SEED' is returned.
    A record is kept of all environment variables
    in the module level variable _set_envvar.

    """
    name_envvar = 'LEVYCHAOS_' + name
    _set_envvar.add(name_envvar)
    return name_envvar


# -----------------------------------------------------------------------------
def _model_options(func):
    """
    Decorate a command with the options shared by every command.

    """
    options = [
        click.option(
            '-m', '--model', 'path_model',
            help     = 'File system path of a JSON or YAML model document.',
            required = False,
            default  = None,
            type     = click.Path(exists = True, dir_okay = False),
            nargs    = 1,
            envvar   = _envvar('MODEL')),
        click.option(
            '-c', '--model-string', 'string_model',
            help     = 'Serialized model document.',
            required = False,
            default  = None,
            type     = click.STRING,
            nargs    = 1,
            envvar   = _envvar('MODEL_STRING')),
        click.option(
            '--trunc', 'trunc',
            help     = 'Small jump truncation level epsilon.',
            required = False,
            default  = None,
            type     = click.FloatRange(min = 0.0, min_open = True),
            nargs    = 1,
            envvar   = _envvar('TRUNC')),
        click.option(
            '--compensate/--no-compensate', 'compensate',
            help     = 'Move the truncated small jump mean into the drift.',
            required = False,
            default  = None,
            envvar   = _envvar('COMPENSATE')),
        click.option(
            '--seed', 'seed',
            help     = 'Root seed. A recorded entropy seed is used if omitted.',
            required = False,
            default  = None,
            type     = click.IntRange(min = 0),
            nargs    = 1,
            envvar   = _envvar('SEED')),
        click.option(
            '--threads', 'threads',
            help     = 'Maximum number of worker threads.',
            required = False,
            default  = 1,
            type     = click.IntRange(min = 1),
            nargs    = 1,
            envvar   = _envvar('THREADS')),
        click.option(
            '--out', 'dirpath_out',
            help     = 'Directory for reports and output files.',
            required = False,
            default  = None,
            type     = click.Path(file_okay = False),
            nargs    = 1,
            envvar   = _envvar('OUT')),
        click.option(
            '--log-level', 'log_level',
            help     = 'Minimum level of log messages written to stderr.',
            required = False,
            default  = 'WARNING',
            type     = click.Choice(['TRACE', 'DEBUG', 'INFO', 'SUCCESS',
                                     'WARNING', 'ERROR', 'CRITICAL']),
            nargs    = 1,
            envvar   = _envvar('LOG_LEVEL')),
        click.option(
            '-s', '--cfg-addr-delim', 'delim_cfg_addr',
            help     = 'The character to use as a delimiter in override addresses.',  # noqa pylint: disable=C0301
            required = False,
            default  = '.',
            type     = click.STRING,
            nargs    = 1,
            envvar   = _envvar('CFG_ADDR_DELIM')),
        click.argument(
            'cfg_override',
            required = False,
            default  = None,
            type     = click.STRING,
            nargs    = -1,
            envvar   = _envvar('CFG_OVERRIDE'))
    ]
    for option in reversed(options):
        func = option(func)
    return func


# -----------------------------------------------------------------------------
def _option_degree(func):
    """
    Decorate a command with the --degree option.

    """
    return click.option(
        '--degree', 'degree',
        help     = 'Maximum total degree D of the martingale basis.',
        required = False,
        default  = None,
        type     = click.IntRange(min = 1),
        nargs    = 1,
        envvar   = _envvar('DEGREE'))(func)


# -----------------------------------------------------------------------------
def _simulation_options(func):
    """
    Decorate a command with the options that control path simulation.

    """
    options = [
        click.option(
            '--horizon', 'horizon',
            help     = 'Time horizon T.',
            required = False,
            default  = None,
            type     = click.FloatRange(min = 0.0, min_open = True),
            nargs    = 1,
            envvar   = _envvar('HORIZON')),
        click.option(
            '--dt', 'dt',
            help     = 'Brownian grid step.',
            required = False,
            default  = None,
            type     = click.FloatRange(min = 0.0, min_open = True),
            nargs    = 1,
            envvar   = _envvar('DT')),
        click.option(
            '--paths', 'paths',
            help     = 'Number of simulated paths.',
            required = False,
            default  = None,
            type     = click.IntRange(min = 2),
            nargs    = 1,
            envvar   = _envvar('PATHS'))
    ]
    for option in reversed(options):
        func = option(func)
    return func


# -----------------------------------------------------------------------------
def _run(command,  # pylint: disable=R0913
         path_model,
         string_model,
         seed,
         threads,
         dirpath_out,
         log_level,
         delim_cfg_addr,
         cfg_override,
         **params):
    """
    Prepare the RunConfig, run the command and exit with its code.

    """
    import levychaos.cfg        # pylint: disable=C0415,W0621
    import levychaos.exception  # pylint: disable=C0415,W0621
    import levychaos.pipeline   # pylint: disable=C0415,W0621

    levychaos.log.setup(log_level   = log_level,
                        dirpath_log = dirpath_out,
                        id_command  = command)

    with levychaos.log.logger.catch(onerror = lambda _: sys.exit(1)):
        try:
            cfg = levychaos.cfg.prepare(command        = command,
                                        path_model     = path_model,
                                        string_model   = string_model,
                                        params         = params,
                                        seed           = seed,
                                        threads        = threads,
                                        dirpath_out    = dirpath_out,
                                        log_level      = log_level,
                                        delim_cfg_addr = delim_cfg_addr,
                                        tup_overrides  = cfg_override)
            sys.exit(levychaos.pipeline.run(cfg))
        except (levychaos.cfg.CfgError,
                levychaos.exception.LevyChaosError) as err:
            print(err, file = sys.stderr)  # Custom message (no stack trace)
            sys.exit(levychaos.exception.exit_code(err))


# -----------------------------------------------------------------------------
@click.group(name             = 'main',
             cls              = levychaos.cli.util.OrderedGroup,
             context_settings = { 'max_content_width': 79 })
def grp_main():
    """
    Levychaos command line interface.

    Build orthogonal martingale bases for multivariate
    Levy processes and verify the chaotic and predictable
    representation of increment products on simulated
    paths.

    Model overrides are given as alternating address
    value pairs after the options:

    > levychaos gram -m model.yaml jumps.theta 2.0

    """


# -----------------------------------------------------------------------------
@grp_main.command()
@_model_options
@click.option(
    '--lam', 'lam',
    help     = 'Exponential moment parameter lambda of the exponential moment check.',
    required = False,
    default  = None,
    type     = click.FloatRange(min = 0.0, min_open = True),
    nargs    = 1,
    envvar   = _envvar('LAM'))
def inspect(lam = None, **kwargs):
    """
    Report dimension, activity class and the exponential moment check.

    """
    _run('inspect', lam = lam, **kwargs)


# -----------------------------------------------------------------------------
@grp_main.command()
@_model_options
@_option_degree
def gram(degree = None, **kwargs):
    """
    Compute the moment table and the Gram matrix.

    """
    _run('gram', degree = degree, **kwargs)


# -----------------------------------------------------------------------------
@grp_main.command()
@_model_options
@_option_degree
def orthogonalize(degree = None, **kwargs):
    """
    Build the orthogonal martingale basis and its certificate.

    """
    _run('orthogonalize', degree = degree, **kwargs)


# -----------------------------------------------------------------------------
@grp_main.command()
@_model_options
@_simulation_options
def simulate(horizon = None, dt = None, paths = None, **kwargs):
    """
    Simulate paths, summarize them and write path CSVs.

    """
    _run('simulate', horizon = horizon, dt = dt, paths = paths, **kwargs)


# -----------------------------------------------------------------------------
@grp_main.command()
@_model_options
@_option_degree
@_simulation_options
@click.option(
    '--kind', 'kind',
    help     = 'Which verification to run.',
    required = False,
    default  = 'orth',
    type     = click.Choice(['orth', 'crp', 'moments']),
    nargs    = 1,
    envvar   = _envvar('KIND'))
@click.option(
    '--tol', 'tol',
    help     = 'Pathwise tolerance of exact mode CRP checks.',
    required = False,
    default  = None,
    type     = click.FloatRange(min = 0.0, min_open = True),
    nargs    = 1,
    envvar   = _envvar('TOL'))
def verify(**kwargs):
    """
    Run the orth, crp or moments verification.

    """
    _run('verify', **kwargs)

