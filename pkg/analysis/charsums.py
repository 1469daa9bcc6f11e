"""
Character sums over F_{p^m}: the canonical additive character
psi(x) = omega^tr(x) with omega = exp(2 pi i / p), the quadratic Gauss sum,
the Gaussian periods over Q and N, and the Theta sums of Gray images.
"""

import functools
import logging

import numpy as np

from algebra.field import as_int_array, check_odd_prime
from codes.regime import ClassLabel, RegimeTag
from codes.trace_codes import gray_image
from utils.errors import InvalidParameterError

logger = logging.getLogger(__name__)

RELATIVE_TOLERANCE = 1e-6


def tolerance(terms):
    """Absolute tolerance for a sum of `terms` unit-magnitude values."""
    return RELATIVE_TOLERANCE * max(1, int(terms))


@functools.lru_cache(maxsize=None)
def omega_powers(p):
    """omega^j for j = 0..p-1, computed once per p."""
    return np.exp(2j * np.pi * np.arange(p) / p)


def epsilon(p):
    """epsilon(p) = (-1)^((p+1)/2): +1 for p = 3 mod 4, -1 for p = 1 mod 4."""
    check_odd_prime(p)
    return 1 if p % 4 == 3 else -1


def additive_char_sum(field, subset):
    """Sum of psi(x) over the given elements of the field (galois array or integer encodings)."""
    values = as_int_array(subset)
    if values.size == 0:
        return 0j
    return complex(omega_powers(field.p)[field.trace_table[values]].sum())


def gauss_quadratic_closed(p, m):
    """
    G(eta) for the quadratic character of F_q, q = p^m.

    (-1)^(m-1) sqrt(q) when p = 1 mod 4 and (-1)^(m-1) i^m sqrt(q) when p = 3 mod 4.
    For m = 2 mod 4 both reduce to epsilon(p) sqrt(q).
    """
    check_odd_prime(p)
    if m < 1:
        raise InvalidParameterError(f"m must be a positive integer, got {m!r}")
    root = float(np.sqrt(float(p) ** m))
    sign = -1 if (m - 1) % 2 else 1
    if p % 4 == 1:
        return complex(sign * root)
    return complex(sign * (1j ** (m % 4)) * root)


def gauss_quadratic_empirical(field):
    """Sum over F* of psi(x) eta(x), with eta(g^k) = (-1)^k."""
    signs = np.where(np.arange(field.q - 1) % 2 == 0, 1.0, -1.0)
    return complex((omega_powers(field.p)[field.trace_of_power] * signs).sum())


def gaussian_periods_closed(p, m):
    """(Q-bar, N-bar) = ((G - 1) / 2, (-G - 1) / 2); they always sum to -1."""
    g = gauss_quadratic_closed(p, m)
    return (g - 1) / 2, (-g - 1) / 2


def gaussian_periods_empirical(field):
    """(sum of psi over Q, sum of psi over N) by direct summation."""
    psi = omega_powers(field.p)[field.trace_of_power]
    return complex(psi[0::2].sum()), complex(psi[1::2].sum())


def theta_vec(y, p):
    """Theta(y) = sum_j omega^(y_j)."""
    y = np.asarray(y, dtype=np.int64) % p
    return complex(omega_powers(p)[y].sum())


def correlation_identity(y, p):
    """
    Both sides of sum_{s=1}^{p-1} Theta(s y) = (p-1) N - p w_H(y).

    Returns:
        tuple: (lhs, rhs) with lhs complex and rhs an integer
    """
    y = np.asarray(y, dtype=np.int64) % p
    lhs = sum(theta_vec(s * y, p) for s in range(1, p))
    rhs = (p - 1) * int(y.size) - p * int(np.count_nonzero(y))
    return lhs, rhs


def theta(code, a):
    """theta(a) = Theta(phi(ev(a))), taken from the Gray image itself."""
    return theta_vec(gray_image(code, a), code.p)


def real_correlation_identity(a, code):
    """
    Both sides of sum_{s=1}^{p-1} theta(s a) = (p-1) Re(theta(a)), valid for p = 3 mod 4.

    Raises:
        InvalidParameterError: If p = 1 mod 4
    """
    p = code.p
    if p % 4 != 3:
        raise InvalidParameterError(f"the real correlation identity needs p = 3 mod 4, got p = {p}")
    lhs = sum(theta(code, a.scale(s)) for s in range(1, p))
    rhs = (p - 1) * theta(code, a).real
    return lhs, rhs


def weight_from_theta(theta_values, length, p):
    """Hamming weight recovered from the theta values of all p-1 nonzero multiples.

    w = ((p-1) N - sum_s theta(s a)) / p, rounded to the nearest integer.
    """
    total = sum(complex(t) for t in theta_values)
    return int(round(((p - 1) * length - total.real) / p))


def predicted_theta(label, regime):
    """
    The value of theta(a) on a class of the case split, in closed form.

    theta factors as S(beta) * (P(alpha) + P(-alpha)) where S sums psi over
    t' in F* and P sums psi over t in the defining set's u-part.
    """
    label = ClassLabel(label)
    q = regime.q
    if label is ClassLabel.ZERO:
        n = (q - 1) ** 2 // 2 if regime.tag is not RegimeTag.TWO_WEIGHT_LPRIME else (q - 1) ** 2
        return complex(2 * n)

    if regime.tag is RegimeTag.TWO_WEIGHT_LPRIME:
        values = {
            ClassLabel.U_ALPHA: -2 * (q - 1),
            ClassLabel.ONE_MINUS_U_BETA: -2 * (q - 1),
            ClassLabel.UNIT: 2,
        }
    elif regime.tag is RegimeTag.TWO_WEIGHT_L:
        # -1 is a non-square, so P(alpha) + P(-alpha) = Q-bar + N-bar = -1
        values = {
            ClassLabel.U_ALPHA: 1 - q,
            ClassLabel.ONE_MINUS_U_BETA: 1 - q,
            ClassLabel.UNIT: 1,
        }
    elif regime.tag is RegimeTag.FIVE_WEIGHT:
        q_bar, n_bar = gaussian_periods_closed(regime.p, regime.m)
        values = {
            ClassLabel.U_ALPHA_Q: 2 * (q - 1) * q_bar,
            ClassLabel.U_ALPHA_N: 2 * (q - 1) * n_bar,
            ClassLabel.ONE_MINUS_U_BETA: 1 - q,
            ClassLabel.UNIT_Q: -2 * q_bar,
            ClassLabel.UNIT_N: -2 * n_bar,
        }
    else:
        regime.require_supported()
    if label not in values:
        raise InvalidParameterError(f"label {label.value} does not occur in regime {regime}")
    return complex(values[label])
