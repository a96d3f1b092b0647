# -*- coding: utf-8 -*-
"""
Test fixtures for levychaos.model package functional requirements tests.

"""


import pytest

import levychaos.test.util


# -----------------------------------------------------------------------------
@pytest.fixture
def two_atom():
    """
    Return the two atom LevyModel.

    """
    return levychaos.test.util.model(levychaos.test.util.two_atom_doc())


# -----------------------------------------------------------------------------
@pytest.fixture
def gamma_1d():
    """
    Return the untruncated one dimensional gamma LevyModel.

    """
    return levychaos.test.util.model(levychaos.test.util.gamma_1d_doc())


# -----------------------------------------------------------------------------
@pytest.fixture
def gamma_copula():
    """
    Return the truncated two dimensional gamma copula LevyModel.

    """
    return levychaos.test.util.model(levychaos.test.util.gamma_copula_doc())
