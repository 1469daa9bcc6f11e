import logging

logger = logging.getLogger(__name__)


class BaseCheck:
    """Base class for the verification checks run against a trace code."""

    def __init__(self, name):
        """Initialize the check.

        Args:
            name (str): Name of the check, used as its key in the verification system
        """
        self.name = name
        self.log_action("creation", f"Check {self.name} was initialized")

    def log_action(self, action_type, action_details):
        """Record an action taken by this check.

        Args:
            action_type (str): Type of action taken
            action_details (str): Details about the action
        """
        logger.info("[%s] %s: %s", self.name, action_type, action_details)

    def run(self, code, config):
        """Run the check on a code - to be implemented by subclasses.

        Args:
            code (TraceCode): The code under test
            config (RunConfig): Run settings (budgets, seed, workers)

        Returns:
            dict: Result with a "status" field
        """
        raise NotImplementedError("Subclasses must implement run method")
