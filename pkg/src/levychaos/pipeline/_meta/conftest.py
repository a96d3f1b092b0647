# -*- coding: utf-8 -*-
"""
Test fixtures for levychaos.pipeline package functional requirements tests.

"""


import json

import pytest

import levychaos.cfg
import levychaos.pipeline
import levychaos.test.util


# -----------------------------------------------------------------------------
@pytest.fixture
def run_command(capsys, tmp_path):
    """
    Return a function that runs a command and returns (code, report, out).

    """
    def run(command, doc, **params):
        cfg  = levychaos.cfg.prepare(command      = command,
                                     string_model = json.dumps(doc),
                                     params       = params,
                                     seed         = 1234,
                                     dirpath_out  = str(tmp_path))
        code = levychaos.pipeline.run(cfg)
        text = capsys.readouterr().out
        return (code, json.loads(text), tmp_path)

    return run


# -----------------------------------------------------------------------------
@pytest.fixture
def two_atom_doc():
    """
    Return the two atom model document.

    """
    return levychaos.test.util.two_atom_doc()
