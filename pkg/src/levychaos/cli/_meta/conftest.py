# -*- coding: utf-8 -*-
"""
Test fixtures for levychaos.cli package functional requirements tests.

"""


import json

import pytest

import levychaos.test.util


# -----------------------------------------------------------------------------
@pytest.fixture
def two_atom_string():
    """
    Return the two atom model serialized for the -c option.

    """
    return json.dumps(levychaos.test.util.two_atom_doc())


# -----------------------------------------------------------------------------
@pytest.fixture
def gamma_string():
    """
    Return the untruncated one dimensional gamma model for the -c option.

    """
    return json.dumps(levychaos.test.util.gamma_1d_doc())


# -----------------------------------------------------------------------------
@pytest.fixture
def filepath_model_malformed(tmp_path):
    """
    Return the path of a JSON file with a syntax error on line 3.

    """
    filepath = tmp_path / 'broken.json'
    filepath.write_text('{\n    "n": 2,\n    "drift": [0.0 0.0]\n}\n')
    return str(filepath)
