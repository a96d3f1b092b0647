# -*- coding: utf-8 -*-
"""
Test fixtures for levychaos.orthobasis package functional requirements tests.

"""


import numpy
import pytest

import levychaos.moments
import levychaos.test.util


# -----------------------------------------------------------------------------
@pytest.fixture
def five_atom_table():
    """
    Return the degree 2 moment table of the five atom model.

    """
    model = levychaos.test.util.model(levychaos.test.util.five_atom_doc())
    return levychaos.moments.moment_table(model, 2)


# -----------------------------------------------------------------------------
@pytest.fixture
def random_spd():
    """
    Return a reproducible random symmetric positive definite 6x6 matrix.

    """
    rng    = numpy.random.Generator(numpy.random.Philox(11))
    factor = rng.standard_normal((6, 6))
    gram   = factor @ factor.T + 0.5 * numpy.eye(6)
    return 0.5 * (gram + gram.T)
