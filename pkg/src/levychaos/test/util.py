# -*- coding: utf-8 -*-
"""
Test utility functions.

Standard model documents used across the
specifications. Each function returns a fresh
model document; use levychaos.model.from_dict to
turn it into a LevyModel.

"""


import levychaos.model


# -----------------------------------------------------------------------------
def _discrete(drift, sigma, atoms):
    """
    Return a discrete model document.

    """
    return { 'n':     len(drift),
             'drift': list(drift),
             'sigma': [list(row) for row in sigma],
             'jumps': { 'kind':  'discrete',
                        'atoms': [{ 'x': list(x), 'rate': rate }
                                  for (x, rate) in atoms] } }


# -----------------------------------------------------------------------------
def two_atom_doc(sigma = ((0.0, 0.0), (0.0, 0.0))):
    """
    Return the two atom model {((1,1), 2), ((1,2), 0.5)} with zero drift.

    """
    return _discrete(drift = (0.0, 0.0),
                     sigma = sigma,
                     atoms = [((1.0, 1.0), 2.0), ((1.0, 2.0), 0.5)])


# -----------------------------------------------------------------------------
def five_atom_doc():
    """
    Return a generic two dimensional model with five atoms and a drift.

    """
    return _discrete(drift = (0.25, -0.5),
                     sigma = ((0.0, 0.0), (0.0, 0.0)),
                     atoms = [((1.0, 1.0),   2.0),
                              ((1.0, 2.0),   0.5),
                              ((-1.0, 0.5),  1.0),
                              ((0.5, -1.5),  0.75),
                              ((-0.5, -0.5), 1.5)])


# -----------------------------------------------------------------------------
def three_dim_doc():
    """
    Return a generic three dimensional model with four atoms.

    """
    return _discrete(drift = (0.0, 0.1, -0.1),
                     sigma = ((0.0, 0.0, 0.0),
                              (0.0, 0.0, 0.0),
                              (0.0, 0.0, 0.0)),
                     atoms = [((1.0, 0.0, 0.5),  1.0),
                              ((0.0, 1.0, -1.0), 0.5),
                              ((1.0, 1.0, 1.0),  0.25),
                              ((-0.5, 0.5, 0.0), 0.75)])


# -----------------------------------------------------------------------------
def single_atom_doc(rate = 1.0, drift = 0.0):
    """
    Return the one dimensional Poisson-type model with a unit atom at 1.

    """
    return _discrete(drift = (drift,),
                     sigma = ((0.0,),),
                     atoms = [((1.0,), rate)])


# -----------------------------------------------------------------------------
def brownian_doc(n = 2):
    """
    Return a pure Brownian model with identity covariance.

    """
    return _discrete(drift = (0.0,) * n,
                     sigma = [[1.0 if i == j else 0.0 for j in range(n)]
                              for i in range(n)],
                     atoms = [])


# -----------------------------------------------------------------------------
def pure_drift_doc():
    """
    Return the deterministic model with drift (1, 0).

    """
    return _discrete(drift = (1.0, 0.0),
                     sigma = ((0.0, 0.0), (0.0, 0.0)),
                     atoms = [])


# -----------------------------------------------------------------------------
def jump_diffusion_doc():
    """
    Return a one dimensional model with unit variance and two atoms.

    """
    return _discrete(drift = (0.1,),
                     sigma = ((1.0,),),
                     atoms = [((1.0,), 1.0), ((-0.5,), 0.5)])


# -----------------------------------------------------------------------------
def gamma_copula_doc(truncation = 0.1):
    """
    Return a two dimensional gamma copula model.

    """
    return { 'n':          2,
             'drift':      [0.0, 0.0],
             'sigma':      [[0.0, 0.0], [0.0, 0.0]],
             'truncation': truncation,
             'jumps':      { 'kind':   'gamma_copula',
                             'gamma':  [1.0, 1.0],
                             'lambda': [1.0, 2.0],
                             'theta':  1.0,
                             'eta':    1.0 } }


# -----------------------------------------------------------------------------
def gamma_1d_doc(truncation = None, compensate = False):
    """
    Return the one dimensional gamma model with gamma = lambda = 1.

    Its untruncated first moment is 1.

    """
    doc = { 'n':     1,
            'drift': [0.0],
            'sigma': [[0.0]],
            'jumps': { 'kind':   'gamma_copula',
                       'gamma':  [1.0],
                       'lambda': [1.0],
                       'theta':  1.0,
                       'eta':    1.0 } }
    if truncation is not None:
        doc['truncation'] = truncation
    if compensate:
        doc['compensate_truncation'] = True
    return doc


# -----------------------------------------------------------------------------
def exponential_copula_doc():
    """
    Return a finite activity two dimensional copula model.

    """
    return { 'n':     2,
             'drift': [0.0, 0.0],
             'sigma': [[0.0, 0.0], [0.0, 0.0]],
             'jumps': { 'kind':      'marginal_copula',
                        'marginals': [{ 'family':    'exponential',
                                        'intensity': 1.0,
                                        'rate':      2.0 },
                                      { 'family':    'exponential',
                                        'intensity': 2.0,
                                        'rate':      1.0 }],
                        'theta':     2.0,
                        'eta':       1.0 } }


# -----------------------------------------------------------------------------
def meixner_copula_doc(truncation = 0.2):
    """
    Return a two dimensional Meixner copula model.

    """
    return { 'n':          2,
             'drift':      [0.0, 0.0],
             'sigma':      [[0.0, 0.0], [0.0, 0.0]],
             'truncation': truncation,
             'jumps':      { 'kind':  'meixner_copula',
                             'm':     [0.5, 0.5],
                             'a':     [0.5, -0.5],
                             'theta': 1.0,
                             'eta':   0.75 } }


# -----------------------------------------------------------------------------
def negmult_doc():
    """
    Return a two dimensional negative multinomial model.

    """
    return { 'n':     2,
             'drift': [0.0, 0.0],
             'sigma': [[0.0, 0.0], [0.0, 0.0]],
             'jumps': { 'kind':     'negative_multinomial',
                        'lambda':   0.8,
                        'mu':       1.0,
                        'lambda_i': [0.1, 0.1] } }


# -----------------------------------------------------------------------------
def model(doc):
    """
    Return the LevyModel for a model document.

    """
    return levychaos.model.from_dict(doc)
