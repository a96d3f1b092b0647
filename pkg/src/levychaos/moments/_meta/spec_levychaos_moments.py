# -*- coding: utf-8 -*-
"""
Functional specification for the levychaos.moments package.

"""


import math

import pytest


# =============================================================================
class SpecifyMoment:
    """
    Spec for the levychaos.moments.moment function.

    """

    # -------------------------------------------------------------------------
    def it_sums_over_atoms(self):
        """
        m_p is the weighted atom sum of x^p.

        """
        import levychaos.moments    # pylint: disable=C0415
        import levychaos.test.util  # pylint: disable=C0415

        model = levychaos.test.util.model(levychaos.test.util.two_atom_doc())
        assert levychaos.moments.moment(model, (1, 1)).value == 3.0
        assert levychaos.moments.moment(model, (2, 2)).value == 4.0
        entry = levychaos.moments.moment(model, (2, 1))
        assert entry.method      == 'exact-sum'
        assert entry.error_bound == 0.0

    # -------------------------------------------------------------------------
    def it_adds_the_drift_to_first_order_entries(self):
        """
        m_{e_i} = a_i + integral of x_i.

        """
        import levychaos.moments    # pylint: disable=C0415
        import levychaos.test.util  # pylint: disable=C0415

        model = levychaos.test.util.model(levychaos.test.util.pure_drift_doc())
        assert levychaos.moments.moment(model, (1, 0)).value == 1.0
        assert levychaos.moments.moment(model, (0, 1)).value == 0.0
        assert levychaos.moments.moment(model, (2, 0)).value == 0.0

        model = levychaos.test.util.model(levychaos.test.util.five_atom_doc())
        expected = 0.25 + 2.0 + 0.5 - 1.0 + 0.375 - 0.75
        assert levychaos.moments.moment(model, (1, 0)).value == \
                                            pytest.approx(expected, rel = 1e-15)

    # -------------------------------------------------------------------------
    def it_integrates_gamma_densities(self):
        """
        m_p = Gamma(p) for the unit gamma marginal.

        """
        import levychaos.moments    # pylint: disable=C0415
        import levychaos.test.util  # pylint: disable=C0415

        model = levychaos.test.util.model(levychaos.test.util.gamma_1d_doc())
        for p in (2, 3, 4):
            entry = levychaos.moments.moment(model, (p,))
            assert entry.method == 'quadrature'
            assert entry.value  == pytest.approx(math.gamma(p), rel = 1e-8)

    # -------------------------------------------------------------------------
    def it_restores_the_untruncated_mean_under_compensation(self):
        """
        With compensation m_(1) is the untruncated gamma mean 1.

        """
        import levychaos.moments    # pylint: disable=C0415
        import levychaos.test.util  # pylint: disable=C0415

        plain       = levychaos.test.util.model(
                        levychaos.test.util.gamma_1d_doc(truncation = 0.1))
        compensated = levychaos.test.util.model(
                        levychaos.test.util.gamma_1d_doc(truncation = 0.1,
                                                         compensate = True))
        assert levychaos.moments.moment(plain, (1,)).value == pytest.approx(
                                                math.exp(-0.1), rel = 1e-8)
        assert levychaos.moments.moment(
                        compensated, (1,)).value == pytest.approx(1.0,
                                                                  rel = 1e-7)
        assert (levychaos.moments.moment(compensated, (2,)).value
                == levychaos.moments.moment(plain, (2,)).value)

    # -------------------------------------------------------------------------
    def it_sums_negative_multinomial_series(self):
        """
        Series moments agree with a direct lattice sum.

        """
        import levychaos.model      # pylint: disable=C0415
        import levychaos.moments    # pylint: disable=C0415
        import levychaos.multiindex  # pylint: disable=C0415
        import levychaos.test.util  # pylint: disable=C0415

        model = levychaos.test.util.model(levychaos.test.util.negmult_doc())
        for p in levychaos.multiindex.enumerate_degree(2, 2):
            entry  = levychaos.moments.moment(model, p)
            direct = math.fsum(
                levychaos.model.negmult_levy_mass(model.jumps, k)
                * k[0] ** p[0] * k[1] ** p[1]
                for k in levychaos.multiindex.enumerate_upto(2, 60))
            assert entry.method == 'series'
            assert entry.error_bound < 1e-14
            assert entry.value == pytest.approx(direct, rel = 1e-12)

    # -------------------------------------------------------------------------
    def it_rejects_the_zero_index_and_wrong_dimensions(self):
        """
        The zero index has no moment and dimensions must match.

        """
        import levychaos.exception  # pylint: disable=C0415
        import levychaos.moments    # pylint: disable=C0415
        import levychaos.test.util  # pylint: disable=C0415

        model = levychaos.test.util.model(levychaos.test.util.two_atom_doc())
        with pytest.raises(levychaos.exception.ParameterError):
            levychaos.moments.moment(model, (0, 0))
        with pytest.raises(levychaos.exception.DimensionError):
            levychaos.moments.moment(model, (1, 0, 0))


# =============================================================================
class SpecifyMomentTable:
    """
    Spec for the levychaos.moments.moment_table function.

    """

    # -------------------------------------------------------------------------
    def it_covers_every_index_up_to_twice_the_degree(self):
        """
        n = 2, degree 2 gives the 14 indices of degree 1 to 4.

        """
        import levychaos.moments    # pylint: disable=C0415
        import levychaos.test.util  # pylint: disable=C0415

        model = levychaos.test.util.model(levychaos.test.util.two_atom_doc())
        table = levychaos.moments.moment_table(model, 2)
        assert len(table)        == 14
        assert table.max_order   == 4
        assert table.fingerprint == model.fingerprint
        assert table[(1, 1)]     == 3.0
        assert table.covers((0, 4))
        assert not table.covers((0, 5))
        assert all(row[2] == 'exact-sum' for row in table.rows())

    # -------------------------------------------------------------------------
    def it_reports_missing_entries(self):
        """
        Asking for an uncovered index raises CoverageError.

        """
        import levychaos.exception  # pylint: disable=C0415
        import levychaos.moments    # pylint: disable=C0415
        import levychaos.test.util  # pylint: disable=C0415

        model = levychaos.test.util.model(levychaos.test.util.two_atom_doc())
        table = levychaos.moments.moment_table(model, 1)
        with pytest.raises(levychaos.exception.CoverageError):
            table.entry((3, 0))

    # -------------------------------------------------------------------------
    def it_rejects_a_nonpositive_degree(self):
        """
        max_degree must be a positive integer.

        """
        import levychaos.exception  # pylint: disable=C0415
        import levychaos.moments    # pylint: disable=C0415
        import levychaos.test.util  # pylint: disable=C0415

        model = levychaos.test.util.model(levychaos.test.util.two_atom_doc())
        with pytest.raises(levychaos.exception.ParameterError):
            levychaos.moments.moment_table(model, 0)

    # -------------------------------------------------------------------------
    def it_is_deterministic(self):
        """
        Two tables of the same model are identical entry by entry.

        """
        import levychaos.moments    # pylint: disable=C0415
        import levychaos.test.util  # pylint: disable=C0415

        model = levychaos.test.util.model(levychaos.test.util.gamma_1d_doc())
        first  = levychaos.moments.moment_table(model, 2)
        second = levychaos.moments.moment_table(model, 2)
        assert first.rows() == second.rows()

    # -------------------------------------------------------------------------
    def it_writes_a_csv_table(self, tmp_path):
        """
        The CSV has one row per index in graded order.

        """
        import levychaos.moments    # pylint: disable=C0415
        import levychaos.test.util  # pylint: disable=C0415

        model = levychaos.test.util.model(
                                    levychaos.test.util.single_atom_doc())
        table = levychaos.moments.moment_table(model, 1)
        filepath = tmp_path / 'moments.csv'
        levychaos.moments.write_csv(table, str(filepath))
        lines = filepath.read_text().splitlines()
        assert lines[0] == 'index,value,method,error_bound'
        assert lines[1] == '[1],1.0,exact-sum,0.0'
        assert lines[2] == '[2],1.0,exact-sum,0.0'
