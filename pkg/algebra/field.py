import functools
import logging

import galois
import numpy as np

from utils.errors import BudgetExceededError, FieldMismatchError, InvalidParameterError

logger = logging.getLogger(__name__)

# Discrete-log and trace tables are built for every field up to this order;
# larger fields answer through galois arithmetic instead.
TABLE_LIMIT = 10**6


def check_odd_prime(p):
    """Raise InvalidParameterError unless p is an odd prime."""
    if isinstance(p, bool) or not isinstance(p, (int, np.integer)):
        raise InvalidParameterError(f"p must be an odd prime, got {p!r}")
    if p < 3 or not galois.is_prime(int(p)):
        raise InvalidParameterError("p must be an odd prime")


def as_int_array(values):
    """Integer encodings of a galois array as a plain int64 numpy array."""
    if isinstance(values, galois.FieldArray):
        values = values.view(np.ndarray)
    return np.asarray(values, dtype=np.int64)


class ExtField:
    """
    The finite field F_{p^m} in a fixed, reproducible model.

    The modulus defaults to the lexicographically smallest monic irreducible
    polynomial of degree m and the primitive element g to the smallest
    primitive element, so every table and matrix derived from the field is
    the same on every run. Elements are galois FieldArray scalars; their
    integer encoding (base-p digits of the coefficient vector, highest degree
    first) indexes the lookup tables below.

    Tables (fields of order at most TABLE_LIMIT):
        exp_table[k]   = g^k for 0 <= k < q-1
        log_table[z]   = discrete log of z base g (-1 for z = 0)
        trace_table[z] = tr(z) in [0, p)
    """

    def __init__(self, p, m, modulus=None):
        """Build and validate the field.

        Args:
            p (int): Odd prime characteristic
            m (int): Extension degree, at least 1
            modulus: Optional monic irreducible polynomial of degree m, given as
                a galois.Poly or a coefficient list (highest degree first)
        """
        check_odd_prime(p)
        if isinstance(m, bool) or not isinstance(m, (int, np.integer)) or m < 1:
            raise InvalidParameterError(f"m must be a positive integer, got {m!r}")

        self.p = int(p)
        self.m = int(m)
        self.q = self.p ** self.m

        self.prime_field = galois.GF(self.p)
        self.modulus = self._resolve_modulus(modulus)

        if self.m == 1:
            self.GF = self.prime_field
            self.g = self.GF(galois.primitive_root(self.p))
        else:
            g_poly = galois.primitive_element(self.modulus, method="min")
            self.GF = galois.GF(self.q, irreducible_poly=self.modulus, primitive_element=int(g_poly))
            self.g = self.GF(int(g_poly))

        self.tabulated = self.q <= TABLE_LIMIT
        if self.tabulated:
            self._build_tables()
        logger.debug("Built GF(%d^%d) with modulus %s and g = %s", self.p, self.m, self.modulus, self.g)

    def _resolve_modulus(self, modulus):
        if modulus is None:
            if self.m == 1:
                return galois.Poly([1, 0], field=self.prime_field)
            return galois.irreducible_poly(self.p, self.m, method="min")

        if isinstance(modulus, galois.Poly):
            if modulus.field is not self.prime_field:
                raise InvalidParameterError(f"modulus must have coefficients in GF({self.p})")
            poly = modulus
        else:
            try:
                poly = galois.Poly([int(c) for c in modulus], field=self.prime_field)
            except (TypeError, ValueError) as e:
                raise InvalidParameterError(f"invalid modulus coefficients {modulus!r}: {e}") from e

        if poly.degree != self.m:
            raise InvalidParameterError(f"modulus {poly} has degree {poly.degree}, expected {self.m}")
        if int(poly.coeffs[0]) != 1:
            raise InvalidParameterError(f"modulus {poly} is not monic")
        if self.m > 1 and not poly.is_irreducible():
            raise InvalidParameterError(f"modulus {poly} is reducible over GF({self.p})")
        return poly

    def _powers(self):
        """g^0 .. g^(q-2) as integer encodings, by repeated doubling of the known prefix."""
        order = self.q - 1
        powers = np.array([1], dtype=np.int64)
        while powers.size < order:
            step = self.g ** int(powers.size)
            powers = np.concatenate((powers, as_int_array(self.GF(powers) * step)))
        return powers[:order]

    def _build_tables(self):
        order = self.q - 1
        self._exp_table = self._powers()

        self._log_table = np.full(self.q, -1, dtype=np.int64)
        self._log_table[self._exp_table] = np.arange(order, dtype=np.int64)

        if self.m == 1:
            self._trace_table = np.arange(self.q, dtype=np.int64)
        else:
            self._trace_table = as_int_array(self.GF.elements.field_trace())
        # tr(g^k), the workhorse of the code evaluation
        self._trace_of_power = self._trace_table[self._exp_table]

    def _table(self, name):
        if not self.tabulated:
            raise BudgetExceededError(
                f"GF({self.p}^{self.m}) has {self.q} elements, above the table limit {TABLE_LIMIT}"
            )
        return getattr(self, name)

    @property
    def exp_table(self):
        return self._table("_exp_table")

    @property
    def log_table(self):
        return self._table("_log_table")

    @property
    def trace_table(self):
        return self._table("_trace_table")

    @property
    def trace_of_power(self):
        return self._table("_trace_of_power")

    # ------------------------------------------------------------------
    # elements

    def element(self, value):
        """Coerce an integer encoding, a coefficient list or a field element into the field."""
        if isinstance(value, galois.FieldArray):
            self.check_member(value)
            return value
        if isinstance(value, (int, np.integer)) and not isinstance(value, bool):
            if not 0 <= value < self.q:
                raise InvalidParameterError(f"{value} is not an element encoding of GF({self.q})")
            return self.GF(int(value))

        coeffs = [int(c) for c in value]
        if len(coeffs) != self.m or any(not 0 <= c < self.p for c in coeffs):
            raise InvalidParameterError(
                f"expected {self.m} coefficients in [0, {self.p}), got {list(value)!r}"
            )
        encoded = 0
        for c in coeffs:
            encoded = encoded * self.p + c
        return self.GF(encoded)

    def coeffs(self, z):
        """Polynomial-basis coordinates of z, highest degree first."""
        self.check_member(z)
        value = int(z)
        digits = []
        for _ in range(self.m):
            digits.append(value % self.p)
            value //= self.p
        return digits[::-1]

    def zero(self):
        return self.GF(0)

    def one(self):
        return self.GF(1)

    def elements(self):
        """All q elements in integer-encoding order."""
        return self.GF.elements

    def check_member(self, *elems):
        for z in elems:
            if type(z) is not self.GF:
                raise FieldMismatchError(f"{z!r} is not an element of GF({self.p}^{self.m})")

    # ------------------------------------------------------------------
    # arithmetic

    def add(self, x, y):
        self.check_member(x, y)
        return x + y

    def sub(self, x, y):
        self.check_member(x, y)
        return x - y

    def neg(self, x):
        self.check_member(x)
        return -x

    def mul(self, x, y):
        self.check_member(x, y)
        return x * y

    def inv(self, x):
        self.check_member(x)
        if int(x) == 0:
            raise ZeroDivisionError(f"cannot invert zero in GF({self.p}^{self.m})")
        return x ** -1

    def power(self, x, e):
        """x^e by square-and-multiply; negative e requires x != 0."""
        self.check_member(x)
        if e < 0:
            return self.power(self.inv(x), -e)
        result = self.one()
        base = x
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # ------------------------------------------------------------------
    # trace, squares, units

    def absolute_trace(self, z):
        """tr(z) = z + z^p + ... + z^(p^(m-1)) as an integer in [0, p)."""
        self.check_member(z)
        if self.tabulated:
            return int(self._trace_table[int(z)])
        return int(z.field_trace())

    def is_square(self, z):
        """Euler criterion: z is in Q iff z^((q-1)/2) = 1."""
        self.check_member(z)
        if int(z) == 0:
            raise InvalidParameterError("0 is neither a square nor a non-square")
        return int(self.power(z, (self.q - 1) // 2)) == 1

    def log(self, z):
        """Discrete logarithm of a nonzero z base g."""
        self.check_member(z)
        if int(z) == 0:
            raise InvalidParameterError("the discrete logarithm of 0 is undefined")
        if self.tabulated:
            return int(self._log_table[int(z)])
        return int(z.log())

    def square_mask(self, values):
        """Vectorised square test on nonzero integer encodings (even discrete log)."""
        values = np.asarray(values, dtype=np.int64)
        if self.tabulated:
            return self._log_table[values] % 2 == 0
        return as_int_array(self.GF(values) ** ((self.q - 1) // 2)) == 1

    def enumerate_units(self):
        """g^0, g^1, ..., g^(q-2); the squares sit at the even positions."""
        return self.GF(self._unit_powers())

    def squares(self):
        return self.GF(self._unit_powers()[0::2])

    def non_squares(self):
        return self.GF(self._unit_powers()[1::2])

    def _unit_powers(self):
        return self._exp_table if self.tabulated else self._powers()

    @functools.cached_property
    def base_field(self):
        """F_p in the same conventions (the field under the base ring R)."""
        if self.m == 1:
            return self
        return build_ext_field(self.p, 1)

    # ------------------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, ExtField):
            return NotImplemented
        return (self.p, self.m, int(self.modulus)) == (other.p, other.m, int(other.modulus))

    def __hash__(self):
        return hash((self.p, self.m, int(self.modulus)))

    def __repr__(self):
        return f"ExtField(p={self.p}, m={self.m}, modulus={self.modulus}, g={int(self.g)})"


@functools.lru_cache(maxsize=None)
def _default_field(p, m):
    return ExtField(p, m)


def build_ext_field(p, m, modulus=None):
    """Build F_{p^m}; fields with the default modulus are cached per (p, m).

    Args:
        p (int): Odd prime
        m (int): Extension degree
        modulus: Optional monic irreducible polynomial (galois.Poly or coefficients, highest first)

    Returns:
        ExtField: The validated field
    """
    if modulus is None:
        check_odd_prime(p)
        if isinstance(m, bool) or not isinstance(m, (int, np.integer)) or m < 1:
            raise InvalidParameterError(f"m must be a positive integer, got {m!r}")
        return _default_field(int(p), int(m))
    return ExtField(p, m, modulus)
