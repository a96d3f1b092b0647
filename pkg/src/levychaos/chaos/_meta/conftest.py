# -*- coding: utf-8 -*-
"""
Test fixtures for levychaos.chaos package functional requirements tests.

"""


import pytest

import levychaos.moments
import levychaos.multiindex
import levychaos.orthobasis
import levychaos.simulate
import levychaos.test.util


# -----------------------------------------------------------------------------
@pytest.fixture
def two_atom():
    """
    Return the two atom model with its moment table and degree 2 basis.

    """
    model = levychaos.test.util.model(levychaos.test.util.two_atom_doc())
    table = levychaos.moments.moment_table(model, 2)
    (basis, _) = levychaos.orthobasis.build(table, 2)
    return (model, table, basis)


# -----------------------------------------------------------------------------
@pytest.fixture
def uncompensated():
    """
    Return a hand made path with a table that switches compensators off.

    With zero drift and zero moment rates every
    integrator reduces to its raw jump sums.

    """
    path = levychaos.simulate.SamplePath(horizon = 1.0,
                                         times   = [0.3, 0.7],
                                         jumps   = [[1.0, 2.0], [2.0, 1.0]],
                                         drift   = [0.0, 0.0],
                                         sigma   = [[0.0, 0.0], [0.0, 0.0]])
    zeros = { p: 0.0 for p in levychaos.multiindex.enumerate_upto(2, 4) }
    table = levychaos.moments.MomentTable.synthetic(2, zeros)
    return (path, table)
