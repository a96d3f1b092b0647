# -*- coding: utf-8 -*-
"""
Module of functions for serializing reports, tables and fingerprints.

JSON reports are written with sorted keys so that
two runs with the same inputs produce identical
bytes. Model fingerprints are taken over the same
canonical JSON form.

"""


import csv
import hashlib
import io
import json
import os

import numpy


LEN_FINGERPRINT = 16


# -----------------------------------------------------------------------------
def hexdigest(data):
    """
    Return a string hash of the specified data.

    """
    if isinstance(data, bytes):
        bytes_buffer = data
    elif isinstance(data, str):
        bytes_buffer = data.encode('utf-8')
    else:
        bytes_buffer = canonical_json(data).encode('utf-8')
    return hashlib.sha512(bytes_buffer).hexdigest()


# -----------------------------------------------------------------------------
def fingerprint(data):
    """
    Return a short fingerprint of the specified data.

    """
    return hexdigest(data)[0:LEN_FINGERPRINT]


# -----------------------------------------------------------------------------
def _to_builtin(obj):
    """
    Return a JSON compatible version of numpy scalars and arrays.

    """
    if isinstance(obj, numpy.ndarray):
        return obj.tolist()
    if isinstance(obj, numpy.integer):
        return int(obj)
    if isinstance(obj, numpy.floating):
        return float(obj)
    if isinstance(obj, numpy.bool_):
        return bool(obj)
    raise TypeError('Cannot serialize {typ}'.format(typ = type(obj).__name__))


# -----------------------------------------------------------------------------
def canonical_json(data):
    """
    Return a compact JSON string with sorted keys.

    """
    return json.dumps(data,
                      sort_keys  = True,
                      separators = (',', ':'),
                      default    = _to_builtin)


# -----------------------------------------------------------------------------
def to_json(data):
    """
    Return an indented JSON string with sorted keys.

    """
    return json.dumps(data,
                      sort_keys = True,
                      indent    = 2,
                      default   = _to_builtin) + '\n'


# -----------------------------------------------------------------------------
def write_json(filepath, data):
    """
    Write data as indented JSON to the specified file path.

    """
    _ensure_parent(filepath)
    with open(filepath, 'w', encoding = 'utf-8') as file_out:
        file_out.write(to_json(data))


# -----------------------------------------------------------------------------
def to_csv(header, rows):
    """
    Return rows formatted as CSV text with the specified header.

    """
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator = '\n')
    writer.writerow(header)
    for row in rows:
        writer.writerow([_csv_cell(cell) for cell in row])
    return buffer.getvalue()


# -----------------------------------------------------------------------------
def write_csv(filepath, header, rows):
    """
    Write rows as CSV to the specified file path.

    """
    _ensure_parent(filepath)
    with open(filepath, 'w', encoding = 'utf-8', newline = '') as file_out:
        file_out.write(to_csv(header, rows))


# -----------------------------------------------------------------------------
def _csv_cell(cell):
    """
    Return a CSV cell, using repr for floats so values round-trip.

    """
    if isinstance(cell, (float, numpy.floating)):
        return repr(float(cell))
    if isinstance(cell, (list, tuple)):
        return json.dumps(list(cell))
    return cell


# -----------------------------------------------------------------------------
def _ensure_parent(filepath):
    """
    Create the parent directory of filepath if needed.

    """
    dirpath = os.path.dirname(filepath)
    if dirpath:
        os.makedirs(dirpath, exist_ok = True)
