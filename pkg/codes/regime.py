from dataclasses import dataclass
from enum import Enum

import numpy as np

from algebra.field import check_odd_prime
from utils.errors import InvalidParameterError, UnsupportedRegimeError


class Variant(str, Enum):
    """Which defining set the code is evaluated on."""

    L = "L"  # uQ + (1-u)F*, index 2 in the units
    LPRIME = "Lprime"  # all units of R_m

    @classmethod
    def parse(cls, value):
        if isinstance(value, cls):
            return value
        for variant in cls:
            if str(value) == variant.value:
                return variant
        raise InvalidParameterError(f"unknown variant {value!r}; expected one of L, Lprime")


class RegimeTag(str, Enum):
    FIVE_WEIGHT = "five_weight"
    TWO_WEIGHT_L = "two_weight_L"
    TWO_WEIGHT_LPRIME = "two_weight_Lprime"
    UNSUPPORTED = "unsupported"


class ClassLabel(str, Enum):
    """The case split of the weight computation; the labels partition R_m."""

    ZERO = "zero"
    U_ALPHA_Q = "u_alpha_Q"
    U_ALPHA_N = "u_alpha_N"
    U_ALPHA = "u_alpha"
    ONE_MINUS_U_BETA = "one_minus_u_beta"
    UNIT_Q = "unit_Q"
    UNIT_N = "unit_N"
    UNIT = "unit"


SPLIT_LABELS = (
    ClassLabel.ZERO,
    ClassLabel.U_ALPHA_Q,
    ClassLabel.U_ALPHA_N,
    ClassLabel.ONE_MINUS_U_BETA,
    ClassLabel.UNIT_Q,
    ClassLabel.UNIT_N,
)

UNSPLIT_LABELS = (
    ClassLabel.ZERO,
    ClassLabel.U_ALPHA,
    ClassLabel.ONE_MINUS_U_BETA,
    ClassLabel.UNIT,
)


@dataclass(frozen=True)
class Regime:
    """A (variant, p, m) triple together with the family it falls into."""

    variant: Variant
    p: int
    m: int
    tag: RegimeTag

    @property
    def q(self):
        return self.p ** self.m

    @property
    def supported(self):
        return self.tag is not RegimeTag.UNSUPPORTED

    @property
    def splits_squares(self):
        """Whether the Q/N split of the class labels applies."""
        return self.tag is RegimeTag.FIVE_WEIGHT

    @property
    def labels(self):
        return SPLIT_LABELS if self.splits_squares else UNSPLIT_LABELS

    def require_supported(self):
        if not self.supported:
            raise UnsupportedRegimeError(
                f"no closed-form weight distribution for variant {self.variant.value} "
                f"with p={self.p}, m={self.m} (m = 0 mod 4, or m odd with p = 1 mod 4)"
            )
        return self

    def __str__(self):
        return self.tag.value


def resolve_regime(variant, p, m):
    """Place (variant, p, m) in the five-weight, two-weight or unsupported family."""
    variant = Variant.parse(variant)
    check_odd_prime(p)
    if isinstance(m, bool) or not isinstance(m, (int, np.integer)) or m < 1:
        raise InvalidParameterError(f"m must be a positive integer, got {m!r}")

    if variant is Variant.LPRIME:
        tag = RegimeTag.TWO_WEIGHT_LPRIME
    elif m % 4 == 2:
        tag = RegimeTag.FIVE_WEIGHT
    elif m % 2 == 1 and p % 4 == 3:
        tag = RegimeTag.TWO_WEIGHT_L
    else:
        tag = RegimeTag.UNSUPPORTED
    return Regime(variant=variant, p=int(p), m=int(m), tag=tag)
