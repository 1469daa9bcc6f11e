"""
Closed-form predictions for the trace codes: per-class weights, the weight
distribution tables, Griesmer and sphere-packing bounds, the Ashikhmin-Barg
minimality condition and the counts of the associated secret-sharing scheme.

All arithmetic is exact integer arithmetic.
"""

import logging
from dataclasses import dataclass, field

import numpy as np

from analysis import linalg
from analysis.charsums import epsilon
from codes.regime import ClassLabel, RegimeTag
from codes.weights import WeightDistribution
from utils.errors import InvalidParameterError, PreconditionError

logger = logging.getLogger(__name__)


def class_sizes(regime):
    """Number of elements of R_m in each class label of the regime."""
    q = regime.q
    if regime.splits_squares:
        return {
            ClassLabel.ZERO: 1,
            ClassLabel.U_ALPHA_Q: (q - 1) // 2,
            ClassLabel.U_ALPHA_N: (q - 1) // 2,
            ClassLabel.ONE_MINUS_U_BETA: q - 1,
            ClassLabel.UNIT_Q: (q - 1) ** 2 // 2,
            ClassLabel.UNIT_N: (q - 1) ** 2 // 2,
        }
    return {
        ClassLabel.ZERO: 1,
        ClassLabel.U_ALPHA: q - 1,
        ClassLabel.ONE_MINUS_U_BETA: q - 1,
        ClassLabel.UNIT: (q - 1) ** 2,
    }


def class_weight(label, regime):
    """
    Lee weight of ev(a) for every a in the given class.

    Raises:
        UnsupportedRegimeError: If the regime has no closed form
        InvalidParameterError: If the label does not belong to the regime's split
    """
    regime.require_supported()
    label = ClassLabel(label)
    if label not in regime.labels:
        raise InvalidParameterError(f"label {label.value} does not occur in regime {regime}")
    if label is ClassLabel.ZERO:
        return 0

    p, m = regime.p, regime.m
    base = (p - 1) * (p ** (2 * m - 1) - p ** (m - 1))

    if regime.tag is RegimeTag.FIVE_WEIGHT:
        eps = epsilon(p)
        half = m // 2
        high = p ** (3 * half - 1)
        low = p ** (half - 1)
        weights = {
            ClassLabel.U_ALPHA_Q: (p - 1) * (p ** (2 * m - 1) - p ** (m - 1) - eps * high + eps * low),
            ClassLabel.U_ALPHA_N: (p - 1) * (p ** (2 * m - 1) - p ** (m - 1) + eps * high - eps * low),
            ClassLabel.ONE_MINUS_U_BETA: base,
            ClassLabel.UNIT_Q: (p - 1) * (p ** (2 * m - 1) - 2 * p ** (m - 1) + eps * low),
            ClassLabel.UNIT_N: (p - 1) * (p ** (2 * m - 1) - 2 * p ** (m - 1) - eps * low),
        }
        return weights[label]

    unit = (p - 1) * (p ** (2 * m - 1) - 2 * p ** (m - 1))
    weight = unit if label is ClassLabel.UNIT else base
    # C' repeats every coordinate pattern of C twice
    return 2 * weight if regime.tag is RegimeTag.TWO_WEIGHT_LPRIME else weight


def predicted_distribution(regime):
    """The full weight distribution (zero word included) predicted for the regime."""
    regime.require_supported()
    counts = {}
    for label, size in class_sizes(regime).items():
        weight = class_weight(label, regime)
        counts[weight] = counts.get(weight, 0) + size
    return WeightDistribution(counts)


def table_rows(regime):
    """
    The weight table of the regime in the factored form the tables are usually printed in.

    Returns:
        list: One dict per nonzero weight with keys "weight", "expression" and
            "frequency", in increasing weight order
    """
    regime.require_supported()
    p, m, q = regime.p, regime.m, regime.q

    if regime.tag is RegimeTag.FIVE_WEIGHT:
        h = m // 2
        rows = [
            ((p - 1) * (p ** (m - 1) - p ** (h - 1)) * (q - 1), "(p-1)(p^(m-1) - p^(m/2-1))(p^m-1)", (q - 1) // 2),
            ((p - 1) * (p ** (m - 1) + p ** (h - 1)) * (q - 1), "(p-1)(p^(m-1) + p^(m/2-1))(p^m-1)", (q - 1) // 2),
            ((p - 1) * (p ** (2 * m - 1) - 2 * p ** (m - 1) - p ** (h - 1)), "(p-1)(p^(2m-1) - 2p^(m-1) - p^(m/2-1))", (q - 1) ** 2 // 2),
            ((p - 1) * (p ** (2 * m - 1) - 2 * p ** (m - 1) + p ** (h - 1)), "(p-1)(p^(2m-1) - 2p^(m-1) + p^(m/2-1))", (q - 1) ** 2 // 2),
            ((p - 1) * (p ** (2 * m - 1) - p ** (m - 1)), "(p-1)(p^(2m-1) - p^(m-1))", q - 1),
        ]
    else:
        factor, prefix = (2, "2") if regime.tag is RegimeTag.TWO_WEIGHT_LPRIME else (1, "")
        rows = [
            (factor * (p - 1) * (p ** (2 * m - 1) - 2 * p ** (m - 1)), f"{prefix}(p-1)(p^(2m-1) - 2p^(m-1))", (q - 1) ** 2),
            (factor * (p - 1) * (p ** (2 * m - 1) - p ** (m - 1)), f"{prefix}(p-1)(p^(2m-1) - p^(m-1))", 2 * (q - 1)),
        ]
    rows.sort(key=lambda row: row[0])
    return [{"weight": w, "expression": expr, "frequency": f} for w, expr, f in rows]


def code_length(regime):
    n = (regime.q - 1) ** 2
    return 2 * n if regime.tag is RegimeTag.TWO_WEIGHT_LPRIME else n


def predicted_parameters(regime):
    """(N, K, d) of the Gray image as predicted by the closed forms."""
    distribution = predicted_distribution(regime)
    return code_length(regime), 2 * regime.m, distribution.min_nonzero


# ----------------------------------------------------------------------
# bounds


def griesmer_sum(d, K, p):
    """sum_{j=0}^{K-1} ceil(d / p^j) in exact integers."""
    return sum(-(-d // p ** j) for j in range(K))


@dataclass
class BoundReport:
    N: int
    K: int
    d: int
    p: int
    griesmer_sum_d: int
    griesmer_sum_d_plus_1: int

    @property
    def meets_bound(self):
        return self.griesmer_sum_d <= self.N

    @property
    def optimal(self):
        """No [N, K, d+1] code can exist while [N, K, d] does."""
        return self.meets_bound and self.griesmer_sum_d_plus_1 > self.N

    def to_dict(self):
        return {"sum_d": self.griesmer_sum_d, "sum_d1": self.griesmer_sum_d_plus_1, "optimal": self.optimal}


def griesmer(N, K, d, p):
    if K < 1 or d < 1:
        raise InvalidParameterError(f"the Griesmer bound needs K >= 1 and d >= 1, got K={K}, d={d}")
    return BoundReport(
        N=N,
        K=K,
        d=d,
        p=p,
        griesmer_sum_d=griesmer_sum(d, K, p),
        griesmer_sum_d_plus_1=griesmer_sum(d + 1, K, p),
    )


def griesmer_closed_form(regime):
    """The closed form of sum ceil((d+1)/p^j) for the two-weight families, None for the five-weight one."""
    p, m = regime.p, regime.m
    if regime.tag is RegimeTag.TWO_WEIGHT_L:
        return p ** (2 * m) - 2 * p ** m + m
    if regime.tag is RegimeTag.TWO_WEIGHT_LPRIME:
        value = 2 * p ** (2 * m) - 4 * p ** m + m
        return value if p == 3 else value - 1
    return None


def optimality_claimed(regime):
    """Whether the parameters fall in the range where Griesmer optimality is proved."""
    p, m = regime.p, regime.m
    if regime.tag is RegimeTag.TWO_WEIGHT_L:
        return m >= 3
    if regime.tag is RegimeTag.TWO_WEIGHT_LPRIME:
        return (p == 3 and m >= 3) or (p >= 5 and m >= 4)
    return False


def sphere_packing_refutes_d3(N, K, p):
    """True iff p^K < 1 + N(p-1), so the [N, N-K] dual cannot have minimum distance 3 or more."""
    return p ** K < 1 + N * (p - 1)


# ----------------------------------------------------------------------
# minimal codewords and secret sharing


def ab_minimality(w0, w_inf, p):
    """Ashikhmin-Barg: every nonzero codeword is minimal when w0 / w_inf > (p-1) / p."""
    if not 0 < w0 <= w_inf:
        raise InvalidParameterError(f"need 0 < w0 <= w_inf, got w0={w0}, w_inf={w_inf}")
    return p * w0 > (p - 1) * w_inf


def dictatorial_positions(matrix, p):
    """Positions i >= 1 whose generator column is a nonzero multiple of column 0."""
    matrix = np.asarray(matrix, dtype=np.int64) % p
    g0 = matrix[:, 0]
    support = np.flatnonzero(g0)
    if support.size == 0:
        raise PreconditionError("column 0 of the generator matrix is zero")
    j = support[0]
    # the only candidate multiplier for column i is G[j, i] / g0[j]
    lam = (matrix[j, 1:] * pow(int(g0[j]), -1, p)) % p
    proportional = np.all((lam[None, :] * g0[:, None]) % p == matrix[:, 1:], axis=0)
    return (np.flatnonzero(proportional & (lam != 0)) + 1).tolist()


def recovery_positions(matrix, p):
    """
    A set of participants able to recover the secret, with their coefficients.

    Starts from the smallest-support null-space basis vector y with y_0 != 0,
    then drops positions while g_0 stays in the span of the remaining columns.
    The result is the support (minus 0) of a minimal dual word, i.e. a minimal
    access set: g_0 = sum_{i in positions} x_i g_i with every x_i != 0.

    Returns:
        tuple: (positions, coefficients) as lists of ints
    """
    basis = linalg.null_space(matrix, p)
    candidates = [y for y in basis if y[0] % p != 0]
    if not candidates:
        raise PreconditionError("no dual codeword involves position 0; the secret cannot be recovered")
    y = min(candidates, key=lambda v: (np.count_nonzero(v), v.tolist()))
    matrix = np.asarray(matrix, dtype=np.int64) % p
    positions = [int(i) for i in np.flatnonzero(y) if i != 0]
    for i in list(positions):
        rest = [j for j in positions if j != i]
        if rest and spans_column_zero(matrix, rest, p):
            positions = rest
    coefficients = [int(x) for x in linalg.solve(matrix[:, positions], matrix[:, 0], p)]
    return positions, coefficients


def spans_column_zero(matrix, positions, p):
    """True iff g_0 lies in the span of the columns at `positions`."""
    columns = matrix[:, positions]
    return linalg.rank(columns, p) == linalg.rank(np.column_stack((columns, matrix[:, 0])), p)


@dataclass
class SecretSharingSummary:
    participants: int
    access_sets: int
    coverage: int
    dictatorial: list = field(default_factory=list)

    @property
    def dictatorial_count(self):
        return len(self.dictatorial)

    def to_dict(self):
        return {
            "participants": self.participants,
            "access_sets": self.access_sets,
            "coverage": self.coverage,
            "dictatorial_count": self.dictatorial_count,
        }


def secret_sharing_summary(N, K, p, matrix, all_minimal, dual_distance):
    """
    Access-structure counts of the scheme built on the Gray image.

    Requires every nonzero codeword to be minimal and the dual distance to be 2.
    """
    if not all_minimal:
        raise PreconditionError("secret-sharing counts need every nonzero codeword to be minimal")
    if dual_distance != 2:
        raise PreconditionError(f"secret-sharing counts need dual distance 2, got {dual_distance}")
    return SecretSharingSummary(
        participants=N - 1,
        access_sets=p ** (K - 1),
        coverage=(p - 1) * p ** (K - 2),
        dictatorial=dictatorial_positions(matrix, p),
    )


def massey_demo(matrix, secret_row, p, positions=None):
    """
    Deal a secret with codeword c = u G and recover it from a set of shares.

    Args:
        matrix: K x N generator matrix
        secret_row: u, length K
        p (int): Prime modulus
        positions: Participants pooling their shares (indices >= 1); defaults
            to recovery_positions(matrix, p)

    Returns:
        tuple: (secret, shares, recovered) with shares = c_1..c_{N-1}

    Raises:
        InvalidParameterError: If the columns at `positions` do not span g_0
    """
    matrix = np.asarray(matrix, dtype=np.int64) % p
    codeword = (np.asarray(secret_row, dtype=np.int64) @ matrix) % p
    secret = int(codeword[0])
    shares = codeword[1:]

    if positions is None:
        positions, _ = recovery_positions(matrix, p)
    positions = [int(i) for i in positions]
    if not positions or min(positions) < 1:
        raise InvalidParameterError("recovery positions must be participant indices >= 1")

    coefficients = linalg.solve(matrix[:, positions], matrix[:, 0], p)
    recovered = int((coefficients @ codeword[positions]) % p)
    logger.debug("Recovered secret %d from %d shares", recovered, len(positions))
    return secret, shares, recovered
