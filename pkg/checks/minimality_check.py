import logging
from dataclasses import dataclass, field

import numpy as np

from checks.base_check import BaseCheck
from codes.trace_codes import codebook
from utils.parallel import map_ranges

logger = logging.getLogger(__name__)

MAX_COUNTEREXAMPLES = 10


@dataclass
class MinimalityResult:
    all_minimal: bool
    checked: int
    counterexamples: list = field(default_factory=list)  # (covering index, covered index) pairs


def minimal_codewords_bruteforce(code, budget=10**4, workers=None):
    """
    Pairwise cover test over all nonzero Gray-image codewords.

    x is minimal when no nonzero y has supp(y) strictly inside supp(x);
    scalar multiples share a support and never disqualify each other.

    Raises:
        BudgetExceededError: If the code has more than `budget` codewords
    """
    words = codebook(code, limit=budget)
    supports = words[1:] != 0  # drop the zero codeword (index 0)
    sizes = supports.sum(axis=1)
    inside = supports.astype(np.float32)
    outside = (~supports).astype(np.float32)

    def scan(start, stop):
        # escaped[x, y] = |supp(y) minus supp(x)|
        escaped = outside[start:stop] @ inside.T
        covered = (escaped == 0) & (sizes[None, :] < sizes[start:stop, None])
        rows, cols = np.nonzero(covered)
        return [(int(r) + start + 1, int(c) + 1) for r, c in zip(rows[:MAX_COUNTEREXAMPLES], cols[:MAX_COUNTEREXAMPLES])]

    found = [pair for part in map_ranges(scan, supports.shape[0], workers) for pair in part]
    return MinimalityResult(
        all_minimal=not found,
        checked=int(supports.shape[0]),
        counterexamples=found[:MAX_COUNTEREXAMPLES],
    )


class MinimalityCheck(BaseCheck):
    """Brute-force confirmation that every nonzero codeword is minimal."""

    def __init__(self):
        super().__init__("minimality")

    def run(self, code, config):
        if code.size > config.minimality_budget:
            self.log_action("skip", f"{code.size} codewords exceed the minimality budget {config.minimality_budget}")
            return {"status": "skipped", "result": None}

        result = minimal_codewords_bruteforce(code, budget=config.minimality_budget, workers=config.workers)
        self.log_action(
            "bruteforce",
            f"{result.checked} nonzero codewords, all minimal = {result.all_minimal}",
        )
        return {"status": "success", "result": result}
