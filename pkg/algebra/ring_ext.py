import logging

import numpy as np

from algebra.field import build_ext_field
from utils.errors import FieldMismatchError

logger = logging.getLogger(__name__)


def mul_components(a, b, c, d):
    """(a + ub)(c + ud) = ac + u(ad + bc + bd), forced by u^2 = u.

    Works on scalars and on equally shaped galois arrays alike.
    """
    return a * c, a * d + b * c + b * d


class RingElem:
    """
    An element a + ub of R_m = F_{p^m} + uF_{p^m} with u^2 = u.

    The pair (a, b) is stored; the CRT coordinates (a, a + b), i.e. the values
    at u = 0 and u = 1, are computed on demand. The base ring R = F_p + uF_p
    is R_m with m = 1.
    """

    __slots__ = ("field", "a", "b")

    def __init__(self, field, a, b):
        """
        Args:
            field (ExtField): The field F_{p^m}
            a: Constant part (element, integer encoding or coefficient list)
            b: Coefficient of u
        """
        self.field = field
        self.a = field.element(a)
        self.b = field.element(b)

    # constructors -------------------------------------------------------

    @classmethod
    def zero(cls, field):
        return cls(field, 0, 0)

    @classmethod
    def one(cls, field):
        return cls(field, 1, 0)

    @classmethod
    def u(cls, field):
        return cls(field, 0, 1)

    # arithmetic ---------------------------------------------------------

    def _same_ring(self, other):
        if not isinstance(other, RingElem):
            raise FieldMismatchError(f"{other!r} is not a ring element")
        if other.field != self.field:
            raise FieldMismatchError(
                f"cannot combine elements of R_{self.field.m} over GF({self.field.p}) "
                f"and R_{other.field.m} over GF({other.field.p})"
            )

    def __add__(self, other):
        self._same_ring(other)
        return RingElem(self.field, self.a + other.a, self.b + other.b)

    def __sub__(self, other):
        self._same_ring(other)
        return RingElem(self.field, self.a - other.a, self.b - other.b)

    def __neg__(self):
        return RingElem(self.field, -self.a, -self.b)

    def __mul__(self, other):
        self._same_ring(other)
        a, b = mul_components(self.a, self.b, other.a, other.b)
        return RingElem(self.field, a, b)

    def scale(self, c):
        """Multiply by an integer scalar of F_p."""
        c = self.field.GF(int(c) % self.field.p)
        return RingElem(self.field, c * self.a, c * self.b)

    def __eq__(self, other):
        if not isinstance(other, RingElem):
            return NotImplemented
        return self.field == other.field and int(self.a) == int(other.a) and int(self.b) == int(other.b)

    def __hash__(self):
        return hash((self.field.p, self.field.m, int(self.a), int(self.b)))

    def is_zero(self):
        return int(self.a) == 0 and int(self.b) == 0

    def __repr__(self):
        return f"RingElem({int(self.a)} + u*{int(self.b)} over GF({self.field.p}^{self.field.m}))"


def ring_ops(x, y):
    """The arithmetic suite on a pair of elements: (x+y, x-y, -x, x*y)."""
    return x + y, x - y, -x, x * y


def crt_split(x):
    """a + ub -> (a, a + b): the values at u = 0 and u = 1."""
    return x.a, x.a + x.b


def crt_join(s, t, field=None):
    """The element with CRT coordinates (s, t): s + u(t - s) = ut + (1-u)s."""
    if field is None:
        field = _field_of(s, t)
    s = field.element(s)
    t = field.element(t)
    return RingElem(field, s, t - s)


def _field_of(s, t):
    if type(s) is not type(t):
        raise FieldMismatchError("CRT coordinates come from different fields")
    gf = type(s)
    return build_ext_field(gf.characteristic, gf.degree)


def is_unit(x):
    """Units are the elements with both CRT coordinates nonzero."""
    s, t = crt_split(x)
    return int(s) != 0 and int(t) != 0


def frobenius(x):
    """F(a + ub) = a^p + ub^p."""
    p = x.field.p
    return RingElem(x.field, x.a ** p, x.b ** p)


def ring_trace(x):
    """Tr(a + ub) = tr(a) + u tr(b), an element of the base ring R."""
    f = x.field
    return RingElem(f.base_field, f.absolute_trace(x.a), f.absolute_trace(x.b))


def trace_by_frobenius(x):
    """Tr as the literal sum of the Frobenius iterates F^0 + ... + F^(m-1).

    The result lies in R_m with both components in the prime subfield.
    """
    total = RingElem.zero(x.field)
    term = x
    for _ in range(x.field.m):
        total = total + term
        term = frobenius(term)
    return total


def embed_base(y, field):
    """View an element of R (m = 1) inside R_m."""
    return RingElem(field, int(y.a), int(y.b))


def ring_elements(field):
    """All q^2 elements of R_m, ordered by (a, b) integer encodings."""
    return [RingElem(field, a, b) for a in range(field.q) for b in range(field.q)]


def ring_units(field):
    """The (q-1)^2 units, as crt_join(s, t) over nonzero s, t in primitive-power order."""
    units = field.exp_table
    return [crt_join(int(s), int(t), field) for s in units for t in units]


def count_units(field):
    return int(np.count_nonzero([is_unit(x) for x in ring_elements(field)]))
