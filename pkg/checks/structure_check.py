import numpy as np

from algebra.field import as_int_array
from algebra.ring_ext import mul_components
from checks.base_check import BaseCheck

# Fields up to this order get the exhaustive nondegeneracy scan.
NONDEGENERACY_EXHAUSTIVE_LIMIT = 27


def _scaling_map(field, c):
    """z -> z c on integer encodings of the whole field."""
    return as_int_array(field.elements() * field.GF(int(c)))


def coordinate_permutation(code, v, w):
    """
    The permutation x -> (v / w) x of the defining set, with c = v / w.

    Returns:
        tuple: (perm, (log c0, log c1)) where perm[i] is the position of c x_i
    """
    ds = code.defining_set
    order = code.q - 1
    dc0 = (ds.log_tp[v] - ds.log_tp[w]) % order
    dc1 = (ds.log_t[v] - ds.log_t[w]) % order
    return ds.position(ds.log_tp + dc0, ds.log_t + dc1), (int(dc0), int(dc1))


def _pair_holds(code, v, w):
    k0, k1 = code.kernels()
    ds = code.defining_set
    exp = code.field.exp_table
    perm, (dc0, dc1) = coordinate_permutation(code, v, w)
    if np.any(perm < 0) or np.unique(perm).size != ds.n:
        return False

    # every a at once: ev(a) read at c x equals ev(a c)
    times0 = _scaling_map(code.field, exp[dc0])
    times1 = _scaling_map(code.field, exp[dc1])
    if not (np.array_equal(k0[:, perm], k0[times0]) and np.array_equal(k1[:, perm], k1[times1])):
        return False

    # regularity: c is the only element of the set carrying w to v
    order = code.q - 1
    hits = ((ds.log_tp + ds.log_tp[w]) % order == ds.log_tp[v]) & ((ds.log_t + ds.log_t[w]) % order == ds.log_t[v])
    return int(np.count_nonzero(hits)) == 1


def check_symmetry(code, trials=100, rng=None, exhaustive=False):
    """
    Coordinate symmetry of the code under its defining-set group.

    For each tested pair (v, w) with c = v / w, reading ev(a) at the positions
    c x gives ev(ac) for every a, and c is the unique element with c w = v.
    """
    n = code.n
    if exhaustive:
        pairs = ((v, w) for v in range(n) for w in range(n))
    else:
        rng = rng if rng is not None else np.random.default_rng(0)
        pairs = zip(rng.integers(0, n, trials).tolist(), rng.integers(0, n, trials).tolist())
    return all(_pair_holds(code, v, w) for v, w in pairs)


def check_nondegeneracy(field, trials=100, rng=None):
    """
    Every nonzero x in R_m has some a with Tr(ax) != 0.

    Exhaustive over R_m for q <= 27, otherwise over `trials` random nonzero x.
    """
    q = field.q
    values = np.arange(q * q, dtype=np.int64)
    if q > NONDEGENERACY_EXHAUSTIVE_LIMIT:
        rng = rng if rng is not None else np.random.default_rng(0)
        xs = rng.integers(1, q * q, trials)
    else:
        xs = values[1:]

    # a ranges over all of R_m as a + ub with (a, b) = divmod(index, q)
    a_part = field.GF(values // q)
    b_part = field.GF(values % q)
    for x in xs.tolist():
        xa, xb = divmod(x, q)
        prod_a, prod_b = mul_components(a_part, b_part, field.GF(xa), field.GF(xb))
        tr_a = field.trace_table[as_int_array(prod_a)]
        tr_b = field.trace_table[as_int_array(prod_b)]
        if not np.any((tr_a != 0) | (tr_b != 0)):
            return False
    return True


class StructureCheck(BaseCheck):
    """Coordinate symmetry of the code and nondegeneracy of the trace form."""

    def __init__(self):
        super().__init__("structure")

    def run(self, code, config):
        rng = np.random.default_rng(config.seed)
        exhaustive = code.n <= 64
        symmetric = check_symmetry(code, trials=config.trials, rng=rng, exhaustive=exhaustive)
        nondegenerate = check_nondegeneracy(code.field, trials=config.trials, rng=rng)
        self.log_action(
            "structure",
            f"symmetry ({'exhaustive' if exhaustive else config.trials} pairs) = {symmetric}, "
            f"nondegeneracy = {nondegenerate}",
        )
        ok = symmetric and nondegenerate
        return {"status": "success" if ok else "mismatch", "symmetry": symmetric, "nondegeneracy": nondegenerate}
