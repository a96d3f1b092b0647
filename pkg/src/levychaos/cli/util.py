# -*- coding: utf-8 -*-
"""
Module of utility functions related to the levychaos command line interface.

"""


import json

import click
import click.testing
import pytest


# =============================================================================
class OrderedGroup(click.Group):
    """
    A click command group that lists commands in definition order.

    The help text for a click command group normally
    lists each command in arbitrary order. This
    subclass keeps the order in which commands were
    added, i.e. the order in which they are defined
    in the source file.

    """

    # -------------------------------------------------------------------------
    def __init__(self, name = None, commands = None, **attrs):
        """
        Return an OrderedGroup instance.

        """
        super().__init__(name, commands, **attrs)
        self.commands = commands or dict()

    # -------------------------------------------------------------------------
    def list_commands(self, ctx):
        """
        Return an ordered list of the commands in the group.

        """
        return self.commands


# -----------------------------------------------------------------------------
def run_test(args,  # pylint: disable=R0913
             expected_exit_code = 0,
             do_expect_stdout   = True,
             expected_stdout    = None,
             expected_stderr    = None):
    """
    Run a command via the command line interface and return its report.

    The report is the JSON document written to
    stdout, or None if nothing was written.

    """
    import levychaos.cli.command  # pylint: disable=C0415

    try:
        runner = click.testing.CliRunner(mix_stderr = False)
    except TypeError:  # click >= 8.2 always separates stderr
        runner = click.testing.CliRunner()
    response = runner.invoke(levychaos.cli.command.grp_main, list(args))

    isok_exit_code = response.exit_code == expected_exit_code
    isok_stdout    = _isok(response.stdout, do_expect_stdout, expected_stdout)
    isok_stderr    = (expected_stderr is None
                      or expected_stderr in response.stderr)

    if isok_exit_code and isok_stdout and isok_stderr:
        if response.stdout == '':
            return None
        return json.loads(response.stdout)

    msg = ''
    if not isok_exit_code:
        msg += 'exit_code:\n{exit_code}\n\n'.format(
                                                exit_code = response.exit_code)
    if not isok_stdout:
        msg += 'stdout:\n{stdout}\n\n'.format(stdout = response.stdout)
    if not isok_stderr:
        msg += 'stderr:\n{stderr}\n\n'.format(stderr = response.stderr)
    pytest.fail(msg = msg, pytrace = False)
    return None


# -----------------------------------------------------------------------------
def _isok(response_output, do_expect_output, expected_output):
    """
    Return true iff response is OK.

    """
    has_output = response_output != ''
    if has_output != do_expect_output:
        return False
    if expected_output is not None and response_output != expected_output:
        return False
    return True
