# -*- coding: utf-8 -*-
"""
Test fixtures for levychaos.simulate package functional requirements tests.

"""


import numpy
import pytest

import levychaos.moments
import levychaos.simulate


# -----------------------------------------------------------------------------
@pytest.fixture
def two_jump_path():
    """
    Return a hand made path with jumps (1, 2) at 0.3 and (2, 1) at 0.7.

    """
    return levychaos.simulate.SamplePath(horizon = 1.0,
                                         times   = [0.3, 0.7],
                                         jumps   = [[1.0, 2.0], [2.0, 1.0]],
                                         drift   = [0.0, 0.0],
                                         sigma   = numpy.zeros((2, 2)))


# -----------------------------------------------------------------------------
@pytest.fixture
def synthetic_table():
    """
    Return an empty two dimensional table that skips fingerprint checks.

    """
    return levychaos.moments.MomentTable.synthetic(2, dict())
