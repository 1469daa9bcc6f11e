from dataclasses import dataclass, field

from algebra.field import check_odd_prime
from codes.regime import Variant
from codes.trace_codes import DEFAULT_BUDGET, DEFAULT_REPRESENTATIVES
from utils.errors import InvalidParameterError
from utils.parallel import default_workers

MODES = ("full", "by_class")
FORMATS = ("json", "csv", "text")


@dataclass
class RunConfig:
    """Settings for one command: the code, how to enumerate it and where to write results."""

    p: int = 3
    m: int = 1
    variant: str = "L"
    mode: str = "full"
    workers: int = field(default_factory=default_workers)
    budget: int = DEFAULT_BUDGET
    representatives: int = DEFAULT_REPRESENTATIVES
    minimality_budget: int = 10**4
    trials: int = 100
    seed: int = 0
    out: str = None
    format: str = "json"

    def validate(self):
        """Raise InvalidParameterError on the first invalid setting; returns self."""
        check_odd_prime(self.p)
        if self.m < 1:
            raise InvalidParameterError(f"m must be a positive integer, got {self.m}")
        Variant.parse(self.variant)
        if self.mode not in MODES:
            raise InvalidParameterError(f"mode must be one of {', '.join(MODES)}, got {self.mode!r}")
        if self.format not in FORMATS:
            raise InvalidParameterError(f"format must be one of {', '.join(FORMATS)}, got {self.format!r}")
        for name in ("workers", "budget", "representatives", "minimality_budget", "trials"):
            if getattr(self, name) < 1:
                raise InvalidParameterError(f"{name} must be at least 1, got {getattr(self, name)}")
        return self

    @classmethod
    def from_args(cls, args):
        """Build from an argparse namespace, keeping defaults for flags the command does not define."""
        values = {}
        for name in cls.__dataclass_fields__:
            value = getattr(args, name, None)
            if value is not None:
                values[name] = value
        return cls(**values)
