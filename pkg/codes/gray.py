"""The Gray isometry phi(a + ub) = (-b, 2a + b) from (R^n, Lee) to (F_p^2n, Hamming)."""

from dataclasses import dataclass

import numpy as np

from algebra.field import build_ext_field
from algebra.ring_ext import RingElem
from utils.errors import FieldMismatchError, InvalidParameterError


@dataclass
class RVector:
    """A vector over the base ring R, held as its two component arrays a + ub."""

    p: int
    a: np.ndarray
    b: np.ndarray

    def __post_init__(self):
        self.a = np.asarray(self.a, dtype=np.int64) % self.p
        self.b = np.asarray(self.b, dtype=np.int64) % self.p
        if self.a.shape != self.b.shape:
            raise InvalidParameterError("component arrays of an RVector must have equal length")

    @classmethod
    def from_elements(cls, elements, p=None):
        elements = list(elements)
        if p is None:
            if not elements:
                raise InvalidParameterError("cannot infer p from an empty vector")
            p = elements[0].field.p
        for x in elements:
            _require_base(x)
            if x.field.p != p:
                raise FieldMismatchError("RVector entries must share one base ring")
        return cls(p, [int(x.a) for x in elements], [int(x.b) for x in elements])

    @classmethod
    def zeros(cls, p, n):
        return cls(p, np.zeros(n, dtype=np.int64), np.zeros(n, dtype=np.int64))

    def __len__(self):
        return int(self.a.size)

    def __add__(self, other):
        return RVector(self.p, self.a + other.a, self.b + other.b)

    def __sub__(self, other):
        return RVector(self.p, self.a - other.a, self.b - other.b)

    def scale(self, c):
        return RVector(self.p, c * self.a, c * self.b)

    def __eq__(self, other):
        if not isinstance(other, RVector):
            return NotImplemented
        return self.p == other.p and np.array_equal(self.a, other.a) and np.array_equal(self.b, other.b)


def _require_base(x):
    if x.field.m != 1:
        raise InvalidParameterError(
            f"the Gray map is defined on R = F_p + uF_p, not on R_{x.field.m}"
        )


def gray_map(x):
    """phi(a + ub) = (-b, 2a + b) for x in the base ring R."""
    _require_base(x)
    p = x.field.p
    a, b = int(x.a), int(x.b)
    return (-b) % p, (2 * a + b) % p


def gray_inverse(pair, p):
    """The preimage of (y0, y1): b = -y0 and a = (y1 + y0) / 2."""
    y0, y1 = (int(v) % p for v in pair)
    half = pow(2, -1, p)
    base = build_ext_field(p, 1)
    return RingElem(base, ((y1 + y0) * half) % p, (-y0) % p)


def gray_vec(v):
    """Componentwise phi in block order: all first components, then all second components.

    The image has length N = 2n.
    """
    return np.concatenate(((-v.b) % v.p, (2 * v.a + v.b) % v.p))


def hamming_weight(v):
    """Number of nonzero entries of a p-ary vector."""
    return int(np.count_nonzero(np.asarray(v)))


def hamming_distance(x, y, p):
    return hamming_weight((np.asarray(x) - np.asarray(y)) % p)


def lee_weight(x):
    """w_L(a + ub) = w_H(-b) + w_H(2a + b)."""
    return hamming_weight(gray_map(x))


def lee_weight_vec(v):
    return hamming_weight(gray_vec(v))


def lee_distance(x, y):
    """d_L(x, y) = w_L(x - y) for RVectors."""
    return lee_weight_vec(x - y)


def lee_weight_one_elements(p):
    """All elements of R of Lee weight 1, by exhaustive scan (gamma and gamma(1-2u))."""
    base = build_ext_field(p, 1)
    found = []
    for a in range(p):
        for b in range(p):
            x = RingElem(base, a, b)
            if lee_weight(x) == 1:
                found.append(x)
    return found
