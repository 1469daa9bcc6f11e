"""
Dual Lee distance of the trace codes.

y in R^n lies in the dual of C iff sum_x y_x Tr(ax) = Tr(a sum_x y_x x) = 0 for
every a, i.e. iff sum_x y_x x = 0 in R_m. The search therefore only needs ring
products of coefficients with defining-set elements.
"""

from dataclasses import dataclass

import numpy as np

from algebra.field import as_int_array
from algebra.ring_ext import RingElem, crt_join, crt_split, embed_base, ring_trace
from checks.base_check import BaseCheck
from codes.gray import lee_weight, lee_weight_one_elements
from utils.errors import DiscrepancyError


@dataclass
class DualDistanceResult:
    distance: int
    witness: tuple = None  # ((i, gamma), (j, delta)) positions with coefficients
    weight_one_free: bool = True


def is_dual_word(code, positions, coefficients):
    """
    Independent membership test for a sparse word y with y_i = coefficients[k] at positions[k].

    Checks sum y_i x_i = 0 in R_m and that sum y_i Tr(a x_i) vanishes for the
    generators a = u g^j and (1-u) g^j, j < m.
    """
    field = code.field
    elements = code.defining_set.elements
    total = RingElem.zero(field)
    for i, y in zip(positions, coefficients):
        total = total + embed_base(y, field) * elements[i]
    if not total.is_zero():
        return False

    base = field.base_field
    for j in range(code.m):
        e = int(field.exp_table[j])
        for a in (crt_join(0, e, field), crt_join(e, 0, field)):
            inner = RingElem.zero(base)
            for i, y in zip(positions, coefficients):
                inner = inner + y * ring_trace(a * elements[i])
            if not inner.is_zero():
                return False
    return True


def _crt_ints(x):
    s, t = crt_split(x)
    return int(s), int(t)


def _annihilated(code, gamma):
    """Mask of positions x with gamma x = 0, via CRT coordinates."""
    field = code.field
    g0, g1 = _crt_ints(gamma)
    exp = field.exp_table
    first = field.GF(g0) * field.GF(exp[code.defining_set.log_tp])
    second = field.GF(g1) * field.GF(exp[code.defining_set.log_t])
    return (as_int_array(first) == 0) & (as_int_array(second) == 0)


def dual_lee_distance_small(code):
    """
    Decide whether the dual Lee distance is 1 or 2.

    Weight 1 needs gamma x = 0 for a position x and a Lee-weight-1 gamma.
    Weight 2 is either a single position annihilated by a Lee-weight-2
    coefficient or a pair gamma x + delta y = 0 with Lee-weight-1 coefficients,
    found by looking up y = -(gamma / delta) x in the defining set.

    Raises:
        DiscrepancyError: If no dual word of Lee weight at most 2 exists
    """
    p = code.p
    field = code.field
    ds = code.defining_set
    weight_one = lee_weight_one_elements(p)

    for gamma in weight_one:
        hits = np.flatnonzero(_annihilated(code, gamma))
        if hits.size:
            return DualDistanceResult(distance=1, witness=((int(hits[0]), gamma),), weight_one_free=False)

    base = field.base_field
    weight_two = [
        RingElem(base, a, b) for a in range(p) for b in range(p) if lee_weight(RingElem(base, a, b)) == 2
    ]
    for gamma in weight_two:
        hits = np.flatnonzero(_annihilated(code, gamma))
        if hits.size:
            return DualDistanceResult(distance=2, witness=((int(hits[0]), gamma),))

    index = np.arange(ds.n)
    for gamma in weight_one:
        for delta in weight_one:
            # -(gamma / delta) has CRT coordinates (r0, r1) in F_p*
            g0, g1 = _crt_ints(gamma)
            d0, d1 = _crt_ints(delta)
            r0 = (-g0 * pow(d0, -1, p)) % p
            r1 = (-g1 * pow(d1, -1, p)) % p
            partner = ds.position(ds.log_tp + field.log_table[r0], ds.log_t + field.log_table[r1])
            valid = np.flatnonzero((partner >= 0) & (partner != index))
            if valid.size:
                i = int(valid[0])
                return DualDistanceResult(distance=2, witness=((i, gamma), (int(partner[i]), delta)))

    raise DiscrepancyError(f"no dual word of Lee weight at most 2 found for {code!r}")


class DualDistanceCheck(BaseCheck):
    """Dual Lee distance search with witness verification."""

    def __init__(self):
        super().__init__("dual_distance")

    def run(self, code, config):
        result = dual_lee_distance_small(code)
        positions = [i for i, _ in result.witness]
        coefficients = [c for _, c in result.witness]
        if not is_dual_word(code, positions, coefficients):
            raise DiscrepancyError(f"dual witness {result.witness} fails the membership test")

        self.log_action("search", f"dual Lee distance {result.distance} with witness positions {positions}")
        asserted = code.m >= 2
        status = "success" if (result.distance == 2 or not asserted) else "mismatch"
        return {"status": status, "result": result, "asserted": asserted}
