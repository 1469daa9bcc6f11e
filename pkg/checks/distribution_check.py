import numpy as np

from analysis.theory import predicted_distribution
from checks.base_check import BaseCheck
from codes.trace_codes import empirical_weight_distribution


class DistributionCheck(BaseCheck):
    """Compares the closed-form weight distribution with the enumerated one."""

    def __init__(self):
        super().__init__("distribution")

    def run(self, code, config):
        """
        Predict and enumerate the weight distribution of the code.

        Args:
            code (TraceCode): The code under test
            config (RunConfig): mode, budget, workers, representatives and seed

        Returns:
            dict: status, predicted, empirical, match
        """
        regime = code.regime.require_supported()
        predicted = predicted_distribution(regime)
        self.log_action("predict", f"{regime} distribution for {code!r}: {predicted.pairs}")

        empirical = empirical_weight_distribution(
            code,
            mode=config.mode,
            budget=config.budget,
            workers=config.workers,
            representatives=config.representatives,
            rng=np.random.default_rng(config.seed),
        )
        match = predicted == empirical
        self.log_action("enumerate", f"{config.mode} enumeration gave {empirical.pairs}; match = {match}")
        return {
            "status": "success" if match else "mismatch",
            "predicted": predicted,
            "empirical": empirical,
            "match": match,
        }
