# -*- coding: utf-8 -*-
"""
Functional specification for the levychaos.util.serialization module.

"""


import json

import numpy


# =============================================================================
class SpecifyFingerprint:
    """
    Spec for the levychaos.util.serialization.fingerprint function.

    """

    # -------------------------------------------------------------------------
    def it_ignores_key_order(self):
        """
        Fingerprints are taken over the canonical JSON form.

        """
        import levychaos.util.serialization  # pylint: disable=C0415

        first  = levychaos.util.serialization.fingerprint({ 'a': 1, 'b': 2 })
        second = levychaos.util.serialization.fingerprint({ 'b': 2, 'a': 1 })
        assert first == second
        assert len(first) == levychaos.util.serialization.LEN_FINGERPRINT

    # -------------------------------------------------------------------------
    def it_distinguishes_different_data(self):
        """
        Different documents give different fingerprints.

        """
        import levychaos.util.serialization  # pylint: disable=C0415

        assert (levychaos.util.serialization.fingerprint({ 'a': 1 })
                != levychaos.util.serialization.fingerprint({ 'a': 2 }))


# =============================================================================
class SpecifyToJson:
    """
    Spec for the levychaos.util.serialization.to_json function.

    """

    # -------------------------------------------------------------------------
    def it_converts_numpy_values(self):
        """
        numpy arrays and scalars serialize as plain JSON values.

        """
        import levychaos.util.serialization  # pylint: disable=C0415

        data = { 'array': numpy.arange(3),
                 'float': numpy.float64(0.5),
                 'flag':  numpy.bool_(True) }
        text = levychaos.util.serialization.to_json(data)
        assert json.loads(text) == { 'array': [0, 1, 2],
                                     'float': 0.5,
                                     'flag':  True }

    # -------------------------------------------------------------------------
    def it_is_byte_stable(self):
        """
        Equal data always gives identical text.

        """
        import levychaos.util.serialization  # pylint: disable=C0415

        text_a = levychaos.util.serialization.to_json({ 'z': 1, 'a': [1.5] })
        text_b = levychaos.util.serialization.to_json({ 'a': [1.5], 'z': 1 })
        assert text_a == text_b
        assert text_a.endswith('\n')


# =============================================================================
class SpecifyToCsv:
    """
    Spec for the levychaos.util.serialization.to_csv function.

    """

    # -------------------------------------------------------------------------
    def it_writes_floats_that_round_trip(self):
        """
        Float cells use repr and list cells use JSON.

        """
        import levychaos.util.serialization  # pylint: disable=C0415

        text = levychaos.util.serialization.to_csv(
                                    ['index', 'value'], [[[1, 0], 0.1 + 0.2]])
        lines = text.splitlines()
        assert lines[0] == 'index,value'
        assert lines[1] == '"[1, 0]",0.30000000000000004'

    # -------------------------------------------------------------------------
    def it_creates_parent_directories(self, tmp_path):
        """
        write_csv creates missing output directories.

        """
        import levychaos.util.serialization  # pylint: disable=C0415

        filepath = tmp_path / 'a' / 'b' / 'table.csv'
        levychaos.util.serialization.write_csv(str(filepath), ['x'], [[1]])
        assert filepath.read_text() == 'x\n1\n'
