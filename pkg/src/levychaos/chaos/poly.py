# -*- coding: utf-8 -*-
"""
Exact polynomial bookkeeping for chaos expansion integrands.

An integrand of an m-fold iterated integral is a
sympy expression in the window length t and the
integration times t_1 (outermost) to t_m (innermost).

"""


import functools
import numbers

import sympy


TIME = sympy.Symbol('t')
DUMMY = sympy.Symbol('u')


# -----------------------------------------------------------------------------
@functools.lru_cache(maxsize = None)
def time_var(j):
    """
    Return the symbol of integration time j (1 = outermost).

    """
    return sympy.Symbol('t_{j}'.format(j = j))


# -----------------------------------------------------------------------------
def variables(m):
    """
    Return (t, t_1, ..., t_m).

    """
    return (TIME,) + tuple(time_var(j) for j in range(1, m + 1))


# -----------------------------------------------------------------------------
def exact(value):
    """
    Return value as an exact sympy number (floats are converted exactly).

    """
    if isinstance(value, sympy.Basic):
        return value
    if isinstance(value, numbers.Integral):
        return sympy.Integer(int(value))
    return sympy.Rational(float(value))


# -----------------------------------------------------------------------------
def push_inside(expr, m):
    """
    Return expr with its upper limit t renamed to a new outermost time.

    The inner times t_j of an m-fold integrand move
    one level in, to t_{j+1}.

    """
    mapping = { time_var(j): time_var(j + 1) for j in range(1, m + 1) }
    mapping[TIME] = time_var(1)
    return expr.xreplace(mapping)


# -----------------------------------------------------------------------------
def integrate_time(expr, m):
    """
    Return the integral of expr over its upper limit, from t_1 (or 0) to t.

    Integrating an m-fold iterated integral in time
    keeps the integrators and, by stochastic Fubini,
    integrates the integrand over [t_1, t].

    """
    lower = time_var(1) if m else sympy.Integer(0)
    return sympy.expand(sympy.integrate(expr.xreplace({ TIME: DUMMY }),
                                        (DUMMY, lower, TIME)))


# -----------------------------------------------------------------------------
def shift_anchor(expr, m, anchor):
    """
    Return expr with relative times t_j replaced by t_j - anchor.

    """
    anchor = exact(anchor)
    if anchor == 0:
        return expr
    return sympy.expand(expr.xreplace(
                { time_var(j): time_var(j) - anchor for j in range(1, m + 1) }))


# -----------------------------------------------------------------------------
def to_sparse(expr, m):
    """
    Return {exponent tuple over (t, t_1..t_m): coefficient}.

    """
    expr = sympy.expand(expr)
    if expr == 0:
        return dict()
    return dict(sympy.Poly(expr, *variables(m)).as_dict())


# -----------------------------------------------------------------------------
def from_sparse(coefficients, m):
    """
    Return the expression of a sparse coefficient map.

    """
    gens = variables(m)
    expr = sympy.Integer(0)
    for (exps, coef) in coefficients.items():
        term = exact(coef)
        for (gen, power) in zip(gens, exps):
            term *= gen ** int(power)
        expr += term
    return sympy.expand(expr)


# -----------------------------------------------------------------------------
def total_degree(expr, m):
    """
    Return the total degree of expr in (t, t_1, ..., t_m); -1 for zero.

    """
    sparse = to_sparse(expr, m)
    if not sparse:
        return -1
    return max(sum(exps) for exps in sparse)


# -----------------------------------------------------------------------------
def numeric_monomials(expr, m, t):
    """
    Return [(exponents over t_1..t_m, float coefficient)] at window length t.

    """
    result = dict()
    for (exps, coef) in to_sparse(expr, m).items():
        value = float(coef) * float(t) ** exps[0]
        key   = tuple(exps[1:])
        result[key] = result.get(key, 0.0) + value
    return sorted((key, value) for (key, value) in result.items()
                               if value != 0.0)


# -----------------------------------------------------------------------------
def coef_to_json(coef):
    """
    Return a coefficient for JSON: rationals as strings, floats as floats.

    """
    if isinstance(coef, sympy.Rational):
        return str(coef)
    return float(coef)


# -----------------------------------------------------------------------------
def coef_from_json(value):
    """
    Return the sympy coefficient of a JSON value.

    """
    if isinstance(value, str):
        return sympy.Rational(value)
    return sympy.Float(value)


# -----------------------------------------------------------------------------
def to_json(expr, m):
    """
    Return a JSON form [[exponents, coefficient], ...] in sorted order.

    """
    return [[list(exps), coef_to_json(coef)]
            for (exps, coef) in sorted(to_sparse(expr, m).items())]


# -----------------------------------------------------------------------------
def from_json(data, m):
    """
    Return the expression of a JSON form produced by to_json.

    """
    return from_sparse({ tuple(exps): coef_from_json(coef)
                         for (exps, coef) in data }, m)
