# -*- coding: utf-8 -*-
"""
Functional specification for the levychaos.cli.command module.

"""


# =============================================================================
class Specify_envvar:
    """
    Spec for the levychaos.cli.command._envvar function.

    """

    # -------------------------------------------------------------------------
    def it_returns_a_string_prefixed_with_levychaos(self):
        """
        levychaos.cli.command._envvar returns a prefixed string.

        """
        import levychaos.cli.command  # pylint: disable=C0415

        assert levychaos.cli.command._envvar('SEED') == 'LEVYCHAOS_SEED'
        assert 'LEVYCHAOS_SEED' in levychaos.cli.command._set_envvar


# =============================================================================
class SpecifyGrpMain:
    """
    Spec for the levychaos.cli.command.grp_main command group.

    """

    # -------------------------------------------------------------------------
    def it_lists_commands_in_definition_order(self):
        """
        The help text names every command in source order.

        """
        import click.testing          # pylint: disable=C0415
        import levychaos.cli.command  # pylint: disable=C0415

        runner   = click.testing.CliRunner()
        response = runner.invoke(levychaos.cli.command.grp_main, ['--help'])
        assert response.exit_code == 0
        assert 'Levychaos command line interface.' in response.output
        names = ('inspect', 'gram', 'orthogonalize', 'simulate', 'verify')
        listing = response.output.split('Commands:')[1]
        positions = [listing.index('  ' + name) for name in names]
        assert positions == sorted(positions)


# =============================================================================
class SpecifyInspect:
    """
    Spec for the levychaos inspect command.

    """

    # -------------------------------------------------------------------------
    def it_checks_a_finite_model(self, two_atom_string, tmp_path):
        """
        Exit code 0 with the check holding; the report is also written.

        """
        import levychaos.cli.util  # pylint: disable=C0415

        report = levychaos.cli.util.run_test(
                    ['inspect', '-c', two_atom_string, '--seed', '3',
                     '--out', str(tmp_path)])
        assert report['hypothesis1']['holds']
        assert report['config']['seed'] == 3
        assert (tmp_path / 'inspect.json').exists()

    # -------------------------------------------------------------------------
    def it_reports_a_failed_check_with_success(self, gamma_string):
        """
        A model violating the check is still a successful inspection.

        """
        import levychaos.cli.util  # pylint: disable=C0415

        report = levychaos.cli.util.run_test(
                    ['inspect', '-c', gamma_string, '--lam', '1.5'])
        assert report['hypothesis1']['holds'] is False

    # -------------------------------------------------------------------------
    def it_compensates_small_jumps_on_request(self, gamma_string):
        """
        --compensate moves the truncated gamma mean 1 - exp(-0.1) into a.

        """
        import math                # pylint: disable=C0415
        import pytest              # pylint: disable=C0415
        import levychaos.cli.util  # pylint: disable=C0415

        plain = levychaos.cli.util.run_test(
                    ['inspect', '-c', gamma_string, '--trunc', '0.1'])
        assert plain['compensated'] is False
        assert plain['drift'] == [0.0]

        report = levychaos.cli.util.run_test(
                    ['inspect', '-c', gamma_string, '--trunc', '0.1',
                     '--compensate'])
        assert report['compensated'] is True
        assert report['config']['model']['compensate_truncation'] is True
        assert report['drift'][0] == pytest.approx(-math.expm1(-0.1),
                                                   rel = 1e-7)

    # -------------------------------------------------------------------------
    def it_names_the_position_of_a_syntax_error(
                                            self, filepath_model_malformed):
        """
        Malformed model documents exit with code 2.

        """
        import levychaos.cli.util  # pylint: disable=C0415

        levychaos.cli.util.run_test(['inspect', '-m', filepath_model_malformed],
                                    expected_exit_code = 2,
                                    do_expect_stdout   = False,
                                    expected_stderr    = '(3:')

    # -------------------------------------------------------------------------
    def it_requires_a_model(self):
        """
        Running without a model is a configuration error.

        """
        import levychaos.cli.util  # pylint: disable=C0415

        levychaos.cli.util.run_test(['inspect'],
                                    expected_exit_code = 2,
                                    do_expect_stdout   = False,
                                    expected_stderr    = 'No model')


# =============================================================================
class SpecifySimulate:
    """
    Spec for the levychaos simulate command.

    """

    # -------------------------------------------------------------------------
    def it_refuses_infinite_activity(self, gamma_string):
        """
        Untruncated gamma jumps cannot be simulated.

        """
        import levychaos.cli.util  # pylint: disable=C0415

        levychaos.cli.util.run_test(['simulate', '-c', gamma_string,
                                     '--paths', '5', '--seed', '0'],
                                    expected_exit_code = 2,
                                    do_expect_stdout   = False)

    # -------------------------------------------------------------------------
    def it_applies_overrides_after_the_options(self, gamma_string):
        """
        A truncation override makes the model simulable.

        """
        import levychaos.cli.util  # pylint: disable=C0415

        report = levychaos.cli.util.run_test(
                    ['simulate', '-c', gamma_string, '--paths', '5',
                     '--seed', '0', 'truncation', '0.2'])
        assert report['config']['model']['truncation'] == 0.2
        assert report['num_paths'] == 5


# =============================================================================
class SpecifyVerify:
    """
    Spec for the levychaos verify command.

    """

    # -------------------------------------------------------------------------
    def it_is_independent_of_the_thread_count(self, two_atom_string):
        """
        Reports with one and with three threads are identical.

        """
        import levychaos.cli.util  # pylint: disable=C0415

        args = ['verify', '-c', two_atom_string, '--kind', 'moments',
                '--degree', '1', '--paths', '300', '--seed', '8']
        serial = levychaos.cli.util.run_test(args + ['--threads', '1'])
        pooled = levychaos.cli.util.run_test(args + ['--threads', '3'])
        assert serial == pooled

    # -------------------------------------------------------------------------
    def it_runs_the_exact_crp_check(self, two_atom_string):
        """
        A pure jump finite activity model is checked pathwise.

        """
        import levychaos.cli.util  # pylint: disable=C0415

        report = levychaos.cli.util.run_test(
                    ['verify', '-c', two_atom_string, '--kind', 'crp',
                     '--degree', '1', '--paths', '20', '--seed', '4'])
        assert report['mode'] == 'exact'
        assert len(report['checks']) == 2
        assert all(check['max_residual'] < 1e-9 for check in report['checks'])


# =============================================================================
class SpecifyExitCode:
    """
    Spec for the mapping of errors to process exit codes.

    """

    # -------------------------------------------------------------------------
    def it_groups_errors_by_cause(self):
        """
        Input errors give 2, numeric 3 and capability 4.

        """
        import levychaos.cfg.exception  # pylint: disable=C0415
        import levychaos.exception      # pylint: disable=C0415

        exception = levychaos.exception
        assert exception.exit_code(
                    levychaos.cfg.exception.CfgError('x')) == 2
        for error in (exception.ConfigurationError, exception.DimensionError,
                      exception.DomainError, exception.ParameterError,
                      exception.CoverageError):
            assert exception.exit_code(error('x')) == 2
        assert exception.exit_code(exception.NumericError('x')) == 3
        assert exception.exit_code(exception.CapabilityError('x')) == 4
        assert exception.exit_code(RuntimeError('x')) == 1
