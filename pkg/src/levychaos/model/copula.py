# -*- coding: utf-8 -*-
"""
Module of Clayton-family Levy copula functions.

The Levy copula

    F(u) = 2^(2-n) (sum_j |u_j|^-theta)^(-1/theta)
           * (eta 1{prod u_j >= 0} - (1-eta) 1{prod u_j < 0})

glues n marginal tail integrals into a joint
Levy measure. The mixed partial derivative of F,
evaluated at the marginal tails and multiplied by
the marginal densities, is the joint density.

"""


import itertools
import math

from levychaos.exception import CapabilityError
from levychaos.exception import DimensionError
from levychaos.exception import DomainError
from levychaos.exception import ParameterError


DIMS_MIXED_PARTIAL = (2, 3)


# -----------------------------------------------------------------------------
def _check_parameters(theta, eta):
    """
    Raise ParameterError unless theta > 0 and 0 <= eta <= 1.

    """
    if not theta > 0:
        raise ParameterError(
            'Clayton parameter theta must be positive, got {val}.'.format(
                                                                val = theta))
    if not 0.0 <= eta <= 1.0:
        raise ParameterError(
            'Clayton parameter eta must lie in [0, 1], got {val}.'.format(
                                                                val = eta))


# -----------------------------------------------------------------------------
def _check_arguments(u):
    """
    Raise DomainError if any tail argument is zero.

    """
    if len(u) < 1:
        raise DimensionError('Copula arguments must not be empty.')
    for value in u:
        if value == 0:
            raise DomainError('Copula arguments must be nonzero.')


# -----------------------------------------------------------------------------
def _sign_factor(u, eta):
    """
    Return eta or -(1-eta) depending on the sign of prod(u).

    """
    is_nonneg = sum(1 for value in u if value < 0) % 2 == 0
    return eta if is_nonneg else -(1.0 - eta)


# -----------------------------------------------------------------------------
def clayton_F(u, theta, eta):  # pylint: disable=C0103
    """
    Return the Clayton-family Levy copula evaluated at u.

    Infinite arguments contribute nothing to the
    inner sum, so F(u_1, inf, ..., inf) reduces to
    2^(2-n) |u_1| times the sign factor.

    """
    _check_parameters(theta, eta)
    _check_arguments(u)
    num_dim = len(u)
    total   = sum(abs(value) ** -theta for value in u if math.isfinite(value))
    if total == 0.0:
        raise DomainError('At least one copula argument must be finite.')
    return (2.0 ** (2 - num_dim)
            * total ** (-1.0 / theta)
            * _sign_factor(u, eta))


# -----------------------------------------------------------------------------
def clayton_mixed_partial(u, theta, eta):
    """
    Return the mixed partial derivative d_1 ... d_n F at u (n = 2 or 3).

    """
    _check_parameters(theta, eta)
    _check_arguments(u)
    num_dim = len(u)
    if num_dim not in DIMS_MIXED_PARTIAL:
        raise CapabilityError(
            'Clayton mixed partials are implemented for n in {dims}, '
            'not n = {n}.'.format(dims = DIMS_MIXED_PARTIAL, n = num_dim))
    if not all(math.isfinite(value) for value in u):
        return 0.0
    is_pos    = sum(1 for value in u if value < 0) % 2 == 0
    weight    = eta if is_pos else 1.0 - eta
    if weight == 0.0:
        return 0.0
    powers    = [abs(value) ** -theta for value in u]
    total     = sum(powers)
    prefactor = 2.0 ** (2 - num_dim) * math.prod(
                                    1.0 + j * theta for j in range(num_dim))
    product   = math.prod(p_j / abs(u_j) for (p_j, u_j) in zip(powers, u))
    return prefactor * total ** (-1.0 / theta - num_dim) * product * weight


# -----------------------------------------------------------------------------
def orthants(signs_per_coordinate):
    """
    Return every sign vector allowed by the per-coordinate supports.

    """
    return list(itertools.product(*signs_per_coordinate))


# -----------------------------------------------------------------------------
def orthant_mass(bounds, theta, eta):
    """
    Return the copula mass of the orthant box cut out at the signed tails.

    bounds holds b_i = U_i(s_i eps) for the orthant
    with signs s_i, so the box is |xi_i| <= |b_i|.

    """
    num_dim = len(bounds)
    if num_dim == 1:
        return abs(bounds[0])
    return abs(clayton_F(bounds, theta, eta))


# -----------------------------------------------------------------------------
def sample_orthant(rng, bounds, theta, count):
    """
    Return count samples of |xi| in the orthant box, shape (count, n).

    Coordinates are drawn one after another from
    their closed form conditional distributions.
    The k-th coordinate (one based) has conditional
    distribution function

        ((C + a^-theta) / (C + b_k^-theta)) ^ -(1/theta + k - 1)

    on (0, b_k], where C collects the already drawn
    coordinates and the upper bounds of the rest.

    """
    num_dim = len(bounds)
    upper   = [abs(value) for value in bounds]
    samples = []
    uniform = rng.random((count, num_dim))
    for row in uniform:
        if num_dim == 1:
            samples.append([upper[0] * (1.0 - row[0])])
            continue
        drawn = []
        for k in range(num_dim):
            rest     = sum(value ** -theta for value in upper[k + 1:])
            head     = sum(value ** -theta for value in drawn)
            const    = head + rest
            total_b  = const + upper[k] ** -theta
            exponent = 1.0 / theta + k
            total_a  = total_b * (1.0 - row[k]) ** (-1.0 / exponent)
            drawn.append((total_a - const) ** (-1.0 / theta))
        samples.append(drawn)
    return samples
