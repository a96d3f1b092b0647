# -*- coding: utf-8 -*-
"""
Predictable representation of a chaos expansion.

Grouping the terms of an expansion by their
outermost integrator p gives

    Z^k(t) = f(t) + sum_p int Phi^p(s) dY^p(s)

where Phi^p(s) collects the integrands whose
outermost integrator is p together with the inner
iterated integrals taken up to s-.

"""


import collections

import levychaos.chaos


# =============================================================================
class PredictableForm():
    """
    Chaos terms grouped under their outermost integrator.

    integrands maps each outer index p to the list
    of (inner integrator sequence, integrand) pairs
    that make up Phi^p. An empty inner sequence is
    the deterministic part of Phi^p.

    """

    # -------------------------------------------------------------------------
    def __init__(self, k, f, integrands, anchor = 0, basis = None):
        """
        Return a PredictableForm instance.

        """
        self.k          = k
        self.f          = f
        self.integrands = integrands
        self.anchor     = anchor
        self.basis      = basis

    # -------------------------------------------------------------------------
    def outer_indices(self):
        """
        Return the outer integrator indices in expansion order.

        """
        return list(self.integrands)

    # -------------------------------------------------------------------------
    def phi(self, p):
        """
        Return the (inner sequence, integrand) pairs of Phi^p.

        """
        return list(self.integrands.get(tuple(p), ()))

    # -------------------------------------------------------------------------
    def to_dict(self):
        """
        Return the form as a JSON compatible dict.

        """
        return { 'k':   self.k.to_json(),
                 'phi': [{ 'outer': list(p),
                           'terms': [levychaos.chaos.ChaosTerm(
                                        (p,) + inner, integrand).to_dict()
                                     for (inner, integrand) in pairs] }
                         for (p, pairs) in self.integrands.items()] }


# -----------------------------------------------------------------------------
def to_predictable_form(expansion):
    """
    Return the PredictableForm of an expansion.

    """
    integrands = collections.OrderedDict()
    for term in expansion.terms:
        outer = term.integrators[0]
        integrands.setdefault(outer, list()).append(
                                        (term.integrators[1:], term.integrand))
    return PredictableForm(k          = expansion.k,
                           f          = expansion.f,
                           integrands = integrands,
                           anchor     = expansion.anchor,
                           basis      = expansion.basis)


# -----------------------------------------------------------------------------
def flatten(form):
    """
    Return the ChaosExpansion whose terms the form regroups.

    """
    terms = [levychaos.chaos.ChaosTerm((outer,) + inner, integrand)
             for (outer, pairs) in form.integrands.items()
             for (inner, integrand) in pairs]
    return levychaos.chaos.ChaosExpansion(k      = form.k,
                                          f      = form.f,
                                          terms  = terms,
                                          anchor = form.anchor,
                                          basis  = form.basis)


# -----------------------------------------------------------------------------
def term_multiset(expansion):
    """
    Return the sorted list of exact term signatures.

    """
    return sorted(term.signature() for term in expansion.terms)
