class TraceCodeError(Exception):
    """Base class for every error raised by the trace-code toolkit.

    Each subclass carries the exit code the command-line front end reports.
    """

    exit_code = 1


class VerificationMismatchError(TraceCodeError):
    """A predicted value and a computed value disagree."""

    exit_code = 1


class ClassNonConstancyError(VerificationMismatchError):
    """Two representatives of one codeword class produced different weights."""


class DiscrepancyError(VerificationMismatchError):
    """A search finished without the outcome the closed forms guarantee."""


class PreconditionError(VerificationMismatchError):
    """An operation was asked to run before its precondition was established."""


class InvalidParameterError(TraceCodeError, ValueError):
    """Bad input: a non-prime p, a reducible modulus, an unknown variant..."""

    exit_code = 2


class FieldMismatchError(InvalidParameterError):
    """Operands live in different fields or rings."""


class BudgetExceededError(TraceCodeError):
    """The requested computation is larger than the configured budget."""

    exit_code = 3


class UnsupportedRegimeError(TraceCodeError):
    """No closed-form weight distribution is known for these parameters."""

    exit_code = 4
