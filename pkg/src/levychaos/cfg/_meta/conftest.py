# -*- coding: utf-8 -*-
"""
Test fixtures for levychaos.cfg package functional requirements tests.

"""


import json

import pytest
import yaml

import levychaos.test.util


# -----------------------------------------------------------------------------
@pytest.fixture
def model_doc():
    """
    Return the two atom model document.

    """
    return levychaos.test.util.two_atom_doc()


# -----------------------------------------------------------------------------
@pytest.fixture
def filepath_model_json(tmp_path, model_doc):
    """
    Return the path of a JSON file holding the two atom model.

    """
    filepath = tmp_path / 'model.json'
    filepath.write_text(json.dumps(model_doc, indent = 4))
    return str(filepath)


# -----------------------------------------------------------------------------
@pytest.fixture
def filepath_model_yaml(tmp_path, model_doc):
    """
    Return the path of a YAML file holding the two atom model.

    """
    filepath = tmp_path / 'model.yaml'
    filepath.write_text(yaml.dump(model_doc))
    return str(filepath)


# -----------------------------------------------------------------------------
@pytest.fixture
def filepath_model_malformed(tmp_path):
    """
    Return the path of a JSON file with a syntax error on line 3.

    """
    filepath = tmp_path / 'broken.json'
    filepath.write_text('{\n    "n": 2,\n    "drift": [0.0 0.0]\n}\n')
    return str(filepath)
