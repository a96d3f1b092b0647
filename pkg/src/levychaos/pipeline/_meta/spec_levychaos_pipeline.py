# -*- coding: utf-8 -*-
"""
Functional specification for the levychaos.pipeline package.

"""


import json


# =============================================================================
class SpecifyCmdInspect:
    """
    Spec for the levychaos.pipeline.cmd_inspect function.

    """

    # -------------------------------------------------------------------------
    def it_classifies_the_model(self, run_command, two_atom_doc):
        """
        The two atom model is finite activity and satisfies the check.

        """
        (code, report, dirpath) = run_command('inspect', two_atom_doc)
        assert code == 0
        assert report['n'] == 2
        assert report['activity_class'] == 'finite'
        assert report['total_intensity'] == 2.5
        assert not report['has_brownian']
        assert report['hypothesis1']['holds']
        assert report['config']['seed'] == 1234
        assert 'runtime' not in report['config']
        stored = json.loads((dirpath / 'inspect.json').read_text())
        assert stored == report

    # -------------------------------------------------------------------------
    def it_reports_an_unbounded_exponential_moment(self, run_command):
        """
        Gamma jumps have no exponential moment of order 1.5.

        """
        import levychaos.test.util  # pylint: disable=C0415

        (code, report, _) = run_command('inspect',
                                        levychaos.test.util.gamma_1d_doc(),
                                        lam = 1.5)
        assert code == 0
        assert report['activity_class'] == 'infinite'
        assert report['total_intensity'] == 'inf'
        assert report['hypothesis1']['lambda'] == 1.5
        assert not report['hypothesis1']['holds']


# =============================================================================
class SpecifyCmdGram:
    """
    Spec for the levychaos.pipeline.cmd_gram function.

    """

    # -------------------------------------------------------------------------
    def it_writes_the_gram_matrix(self, run_command, two_atom_doc):
        """
        Degree 2 in two dimensions has five indices.

        """
        (code, report, dirpath) = run_command('gram', two_atom_doc, degree = 2)
        assert code == 0
        assert report['indices'] == [[1, 0], [0, 1], [2, 0], [1, 1], [0, 2]]
        assert len(report['gram']) == 5
        assert report['gram'][0][0] == 2.5
        lines = (dirpath / 'gram.csv').read_text().splitlines()
        assert len(lines) == 6
        assert (dirpath / 'moments.csv').exists()


# =============================================================================
class SpecifyCmdOrthogonalize:
    """
    Spec for the levychaos.pipeline.cmd_orthogonalize function.

    """

    # -------------------------------------------------------------------------
    def it_collapses_a_poisson_type_model(self, run_command):
        """
        A unit atom keeps one element out of three.

        """
        import levychaos.test.util  # pylint: disable=C0415

        (code, report, dirpath) = run_command(
                                        'orthogonalize',
                                        levychaos.test.util.single_atom_doc(),
                                        degree = 3)
        assert code == 0
        assert report['basis']['retained'] == [[1]]
        assert report['basis']['dropped'] == [[2], [3]]
        assert report['certificate']['retained'] == 1
        assert (dirpath / 'basis.json').exists()
        assert (dirpath / 'basis.csv').exists()

    # -------------------------------------------------------------------------
    def it_keeps_first_order_brownian_elements(self, run_command):
        """
        Pure Brownian motion keeps e_1 and e_2 only.

        """
        import levychaos.test.util  # pylint: disable=C0415

        (code, report, _) = run_command('orthogonalize',
                                        levychaos.test.util.brownian_doc(),
                                        degree = 2)
        assert code == 0
        assert report['basis']['retained'] == [[1, 0], [0, 1]]
        assert report['certificate']['max_offdiag'] == 0.0


# =============================================================================
class SpecifyCmdSimulate:
    """
    Spec for the levychaos.pipeline.cmd_simulate function.

    """

    # -------------------------------------------------------------------------
    def it_summarizes_and_writes_paths(self, run_command, two_atom_doc):
        """
        One jump file per path and the expected jump count.

        """
        (code, report, dirpath) = run_command('simulate', two_atom_doc,
                                              paths = 20)
        assert code == 0
        assert report['num_paths'] == 20
        assert report['jump_count']['expected'] == 2.5
        assert len(report['terminal']['mean']) == 2
        written = sorted(path.name for path in (dirpath / 'paths').iterdir())
        assert len(written) == 20
        assert written[0] == 'path_000000_jumps.csv'


# =============================================================================
class SpecifyCmdVerify:
    """
    Spec for the levychaos.pipeline.cmd_verify function.

    """

    # -------------------------------------------------------------------------
    def it_runs_exact_crp_checks_up_to_the_degree(
                                            self, run_command, two_atom_doc):
        """
        Every |k| <= 2 is checked pathwise.

        """
        (code, report, dirpath) = run_command('verify', two_atom_doc,
                                              kind = 'crp', degree = 2,
                                              paths = 50)
        assert code == 0
        assert report['mode'] == 'exact'
        assert [check['k'] for check in report['checks']] == [
                                [1, 0], [0, 1], [2, 0], [1, 1], [0, 2]]
        for check in report['checks']:
            assert check['max_residual'] < 1e-9
        assert (dirpath / 'verify.json').exists()

    # -------------------------------------------------------------------------
    def it_runs_the_moment_check(self, run_command, two_atom_doc):
        """
        Moments up to twice the degree are compared.

        """
        (code, report, _) = run_command('verify', two_atom_doc,
                                        kind = 'moments', degree = 1,
                                        paths = 2000)
        assert code == 0
        assert report['kind'] == 'moments'
        assert len(report['rows']) == 5
        assert report['config']['params']['kind'] == 'moments'

    # -------------------------------------------------------------------------
    def it_defaults_to_the_orthogonality_check(
                                            self, run_command, two_atom_doc):
        """
        verify without a kind runs the orth check.

        """
        (code, report, _) = run_command('verify', two_atom_doc, degree = 1,
                                        paths = 200)
        assert code == 0
        assert report['kind'] == 'orth'
        assert len(report['means']) == 2
