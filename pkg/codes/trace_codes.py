"""
The trace codes C(m, p) and C'(m, p) over R = F_p + uF_p.

A codeword is ev(a) = (Tr(ax))_{x in L} for a in R_m, where the defining set L
is either uQ + (1-u)F* (variant L) or all units of R_m (variant Lprime).

Everything here works in CRT coordinates: a has coordinates (a0, a1) and the
defining-set element x = ut + (1-u)t' has coordinates (t', t), so Tr(ax) has
coordinates (tr(a0 t'), tr(a1 t)). With c0 = tr(a0 t') and c1 = tr(a1 t) the
Gray image of that coordinate is (c0 - c1, c0 + c1). Traces are read from the
field's tr(g^k) table, so a whole codeword is two gathers over the discrete
logs of the defining set.
"""

import logging
from dataclasses import dataclass, field as dataclass_field

import numpy as np

from algebra.field import build_ext_field
from algebra.ring_ext import RingElem, crt_join, crt_split, ring_trace
from analysis import linalg
from codes.gray import RVector
from codes.regime import ClassLabel, Variant, resolve_regime
from codes.weights import WeightDistribution
from utils.errors import (
    BudgetExceededError,
    ClassNonConstancyError,
    FieldMismatchError,
    InvalidParameterError,
    UnsupportedRegimeError,
)
from utils.parallel import map_ranges

logger = logging.getLogger(__name__)

# Coordinate evaluations allowed for a full enumeration (q^2 codewords times n positions).
DEFAULT_BUDGET = 5 * 10**9
DEFAULT_REPRESENTATIVES = 20
# Codewords materialised at once by codebook().
CODEBOOK_LIMIT = 10**4


@dataclass(eq=False)
class DefiningSet:
    """
    An ordered defining set, stored as the discrete logs of its CRT coordinates.

    Position i holds x_i = u g^log_t[i] + (1-u) g^log_tp[i]. The outer loop runs
    over t (squares for variant L, all of F* for Lprime) and the inner loop over
    t' in F*, both in primitive-power order.
    """

    field: object
    variant: Variant
    log_t: np.ndarray
    log_tp: np.ndarray
    _elements: list = dataclass_field(default=None, repr=False)

    @property
    def n(self):
        return int(self.log_t.size)

    def __len__(self):
        return self.n

    @property
    def elements(self):
        """The positions as RingElem objects (built on first use)."""
        if self._elements is None:
            exp = self.field.exp_table
            self._elements = [
                crt_join(int(exp[s]), int(exp[t]), self.field) for s, t in zip(self.log_tp, self.log_t)
            ]
        return self._elements

    def position(self, log_s, log_t):
        """Index of the element with CRT logs (log_s, log_t), or -1 where it is not in the set.

        Works elementwise on arrays.
        """
        order = self.field.q - 1
        log_s = np.asarray(log_s, dtype=np.int64) % order
        log_t = np.asarray(log_t, dtype=np.int64) % order
        if self.variant is Variant.L:
            index = (log_t // 2) * order + log_s
            return np.where(log_t % 2 == 0, index, -1)
        return log_t * order + log_s

    def index_of(self, x):
        """Position of a ring element in the set, or None."""
        if x.field != self.field:
            raise FieldMismatchError("element and defining set live over different fields")
        s, t = crt_split(x)
        if int(s) == 0 or int(t) == 0:
            return None
        pos = int(self.position(self.field.log(s), self.field.log(t)))
        return None if pos < 0 else pos


def build_defining_set(field, variant):
    """Enumerate L or L' in the canonical primitive-power double loop."""
    variant = Variant.parse(variant)
    if not field.tabulated:
        raise BudgetExceededError(
            f"no defining set over GF({field.p}^{field.m}): {field.q} elements exceed the table limit"
        )
    order = field.q - 1
    step = 2 if variant is Variant.L else 1
    t_logs = np.arange(0, order, step, dtype=np.int64)
    log_t = np.repeat(t_logs, order)
    log_tp = np.tile(np.arange(order, dtype=np.int64), t_logs.size)
    logger.debug("Defining set %s over GF(%d^%d): n = %d", variant.value, field.p, field.m, log_t.size)
    return DefiningSet(field=field, variant=variant, log_t=log_t, log_tp=log_tp)


def trace_rows(field, z_values, logs):
    """tr(z g^k) for every z in z_values (integer encodings) and k in logs, as a len(z) x len(logs) array."""
    z_values = np.atleast_1d(np.asarray(z_values, dtype=np.int64))
    order = field.q - 1
    dtype = np.min_scalar_type(field.p)
    rows = np.zeros((z_values.size, np.asarray(logs).size), dtype=dtype)
    nonzero = z_values != 0
    if nonzero.any():
        z_logs = field.log_table[z_values[nonzero]]
        rows[nonzero] = field.trace_of_power[(z_logs[:, None] + logs[None, :]) % order]
    return rows


class TraceCode:
    """
    The code C(m, p) (variant L) or C'(m, p) (variant Lprime).

    Gray length N = 2n, dimension K = 2m over F_p and p^(2m) codewords.
    Codeword index a0 * q + a1 stands for the element with CRT coordinates
    (a0, a1) given as integer encodings.
    """

    def __init__(self, field, variant):
        self.field = field
        self.variant = Variant.parse(variant)
        self.defining_set = build_defining_set(field, self.variant)
        self.regime = resolve_regime(self.variant, field.p, field.m)
        self._kernels = None

    @property
    def p(self):
        return self.field.p

    @property
    def m(self):
        return self.field.m

    @property
    def q(self):
        return self.field.q

    @property
    def n(self):
        return self.defining_set.n

    @property
    def length(self):
        return 2 * self.n

    @property
    def dimension(self):
        return 2 * self.m

    @property
    def size(self):
        return self.q ** 2

    def coordinate_evaluations(self):
        return self.size * self.n

    def kernels(self):
        """(K0, K1) with K0[z] = tr(z t') and K1[z] = tr(z t) along the positions, for all q values of z."""
        if self._kernels is None:
            everything = np.arange(self.q, dtype=np.int64)
            self._kernels = (
                trace_rows(self.field, everything, self.defining_set.log_tp),
                trace_rows(self.field, everything, self.defining_set.log_t),
            )
        return self._kernels

    def components(self, a0, a1):
        """(c0, c1) = (tr(a0 t'), tr(a1 t)) along the positions, as int64 arrays."""
        c0 = trace_rows(self.field, [a0], self.defining_set.log_tp)[0].astype(np.int64)
        c1 = trace_rows(self.field, [a1], self.defining_set.log_t)[0].astype(np.int64)
        return c0, c1

    def weights_of(self, a0s, a1s):
        """Lee weights of ev(a) for paired arrays of CRT coordinates."""
        c0 = trace_rows(self.field, a0s, self.defining_set.log_tp)
        c1 = trace_rows(self.field, a1s, self.defining_set.log_t)
        neg_c1 = (-c1.astype(np.int64)) % self.p
        return (c0 != c1).sum(axis=1) + (c0 != neg_c1).sum(axis=1)

    def weight(self, a):
        s, t = crt_split(self._check(a))
        return int(self.weights_of([int(s)], [int(t)])[0])

    def _check(self, a):
        if not isinstance(a, RingElem) or a.field != self.field:
            raise FieldMismatchError(f"{a!r} is not an element of R_{self.m} over GF({self.p})")
        return a

    def element_at(self, index):
        """The ring element behind codeword index a0 * q + a1."""
        a0, a1 = divmod(int(index), self.q)
        return crt_join(a0, a1, self.field)

    def __repr__(self):
        return f"TraceCode(p={self.p}, m={self.m}, variant={self.variant.value}, [{self.length}, {self.dimension}])"


def build_trace_code(p, m, variant, modulus=None):
    return TraceCode(build_ext_field(p, m, modulus), variant)


# ----------------------------------------------------------------------
# codewords


def evaluate(a, code):
    """ev(a) as an RVector over R: coordinate i is Tr(a x_i)."""
    s, t = crt_split(code._check(a))
    c0, c1 = code.components(int(s), int(t))
    # Tr(ax) has CRT coordinates (c0, c1), i.e. c0 + u(c1 - c0)
    return RVector(code.p, c0, c1 - c0)


def evaluate_reference(a, code):
    """ev(a) through ring arithmetic one position at a time; slow, for cross-checks."""
    code._check(a)
    return RVector.from_elements([ring_trace(a * x) for x in code.defining_set.elements], p=code.p)


def gray_image(code, a):
    """phi(ev(a)) in block order, length N."""
    s, t = crt_split(code._check(a))
    c0, c1 = code.components(int(s), int(t))
    return np.concatenate(((c0 - c1) % code.p, (c0 + c1) % code.p))


def codebook(code, limit=CODEBOOK_LIMIT):
    """All p^(2m) Gray-image codewords, row a0 * q + a1.

    Raises:
        BudgetExceededError: If the code has more than `limit` codewords
    """
    if code.size > limit:
        raise BudgetExceededError(f"codebook of {code.size} codewords exceeds the limit {limit}")
    k0, k1 = code.kernels()
    k0 = k0.astype(np.int64)
    k1 = k1.astype(np.int64)
    blocks = []
    for a0 in range(code.q):
        c0 = k0[a0][None, :]
        blocks.append(np.concatenate(((c0 - k1) % code.p, (c0 + k1) % code.p), axis=1))
    return np.vstack(blocks)


def gray_generator_matrix(code):
    """
    The 2m x N generator matrix of the Gray image.

    Rows 0..m-1 are phi(ev(u g^i)) and rows m..2m-1 are phi(ev((1-u) g^i)),
    i = 0..m-1. The powers g^0..g^(m-1) form a basis of F_{p^m} because g has
    degree m, so the rows span the whole image.
    """
    basis = [int(code.field.exp_table[i]) for i in range(code.m)]
    rows = []
    for e in basis:
        rows.append(gray_image(code, crt_join(0, e, code.field)))
    for e in basis:
        rows.append(gray_image(code, crt_join(e, 0, code.field)))
    return np.vstack(rows).astype(np.int64)


def generator_rank(matrix, p):
    """Rank over F_p."""
    return linalg.rank(matrix, p)


# ----------------------------------------------------------------------
# weight distributions


def classify(a, regime):
    """The case label of a = u alpha + (1-u) beta; alpha = a1 carries the Q/N split."""
    s, t = crt_split(a)
    beta, alpha = int(s), int(t)
    field = a.field
    if alpha == 0 and beta == 0:
        return ClassLabel.ZERO
    if alpha == 0:
        return ClassLabel.ONE_MINUS_U_BETA
    if beta == 0:
        if regime.splits_squares:
            return ClassLabel.U_ALPHA_Q if field.log_table[alpha] % 2 == 0 else ClassLabel.U_ALPHA_N
        return ClassLabel.U_ALPHA
    if regime.splits_squares:
        return ClassLabel.UNIT_Q if field.log_table[alpha] % 2 == 0 else ClassLabel.UNIT_N
    return ClassLabel.UNIT


def class_members(field, label):
    """(beta choices, alpha choices) as integer encodings; the class is their product."""
    zero = np.zeros(1, dtype=np.int64)
    units = field.exp_table
    squares = units[0::2]
    non_squares = units[1::2]
    members = {
        ClassLabel.ZERO: (zero, zero),
        ClassLabel.U_ALPHA_Q: (zero, squares),
        ClassLabel.U_ALPHA_N: (zero, non_squares),
        ClassLabel.U_ALPHA: (zero, units),
        ClassLabel.ONE_MINUS_U_BETA: (units, zero),
        ClassLabel.UNIT_Q: (units, squares),
        ClassLabel.UNIT_N: (units, non_squares),
        ClassLabel.UNIT: (units, units),
    }
    return members[ClassLabel(label)]


def _full_distribution(code, budget, workers):
    cost = code.coordinate_evaluations()
    if cost > budget:
        raise BudgetExceededError(
            f"full enumeration of {code!r} needs {cost} coordinate evaluations, budget is {budget}"
        )
    k0, k1 = code.kernels()
    neg_k1 = ((-k1.astype(np.int64)) % code.p).astype(k1.dtype)

    def count_range(start, stop):
        counts = {}
        for a0 in range(start, stop):
            c0 = k0[a0][None, :]
            # Gray weight over all a1 at once: [c0 != c1] + [c0 != -c1]
            weights = (k1 != c0).sum(axis=1) + (neg_k1 != c0).sum(axis=1)
            values, freqs = np.unique(weights, return_counts=True)
            for w, f in zip(values.tolist(), freqs.tolist()):
                counts[w] = counts.get(w, 0) + f
        return counts

    parts = map_ranges(count_range, code.q, workers)
    return WeightDistribution.merge(parts)


def _by_class_distribution(code, representatives, rng):
    regime = code.regime
    if not regime.supported:
        raise UnsupportedRegimeError(
            f"by_class mode needs a regime with class-constant weights; {code!r} is {regime}"
        )
    rng = rng if rng is not None else np.random.default_rng(0)
    counts = {}
    for label in regime.labels:
        betas, alphas = class_members(code.field, label)
        size = betas.size * alphas.size
        if size <= representatives:
            picks = np.arange(size)
        else:
            picks = np.sort(rng.choice(size, size=representatives, replace=False))
        b_idx, a_idx = np.divmod(picks, alphas.size)
        weights = code.weights_of(betas[b_idx], alphas[a_idx])
        distinct = sorted(set(weights.tolist()))
        if len(distinct) != 1:
            raise ClassNonConstancyError(
                f"weights {distinct} within class {label.value} of {code!r}"
            )
        logger.info("Class %s: %d members of weight %d", label.value, size, distinct[0])
        counts[distinct[0]] = counts.get(distinct[0], 0) + size
    return WeightDistribution(counts)


def empirical_weight_distribution(
    code,
    mode="full",
    budget=DEFAULT_BUDGET,
    workers=None,
    representatives=DEFAULT_REPRESENTATIVES,
    rng=None,
):
    """
    Weight distribution of the Gray image, zero word included.

    Args:
        code (TraceCode): The code
        mode (str): "full" enumerates all of R_m; "by_class" weighs k random
            representatives of each class label and scales by the class sizes
        budget (int): Coordinate-evaluation limit for full mode
        workers (int): Thread count for full mode (results do not depend on it)
        representatives (int): k for by_class mode
        rng: numpy Generator for by_class sampling

    Returns:
        WeightDistribution: weight -> frequency, summing to p^(2m)
    """
    if mode == "full":
        return _full_distribution(code, budget, workers)
    if mode == "by_class":
        return _by_class_distribution(code, representatives, rng)
    raise InvalidParameterError(f"unknown mode {mode!r}; expected full or by_class")
