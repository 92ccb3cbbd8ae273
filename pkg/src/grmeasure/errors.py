"""Exception hierarchy.

Every failure mode that depends on a budget or cap is its own class so that
callers (and the CLI exit-code table) can tell "too big to decide" apart from
a mathematical answer.
"""


class GRError(Exception):
    """Base class for all package errors."""


class DimensionMismatchError(GRError, ValueError):
    """Operands live in different ambient spaces, quivers or primes."""


class InvalidSubrepError(GRError, ValueError):
    """A tuple of subspaces is not closed under the arrow maps."""


class InvalidParameterError(GRError, ValueError):
    """A family parameter (tube polynomial, prime, bimodule data) is invalid."""


class InconsistentInputError(GRError, ValueError):
    """Inputs that are individually valid but contradict each other."""


class CapExceededError(GRError):
    """An exhaustive search would exceed its enumeration cap."""


class BudgetExceededError(GRError):
    """An enumeration inspected more candidates than its budget allows."""


class UndecidedError(GRError):
    """A randomized search failed and exhaustive search is over the cap.

    Never to be read as a negative answer.
    """


class NoGRSubmoduleError(GRError, ValueError):
    """Gabriel-Roiter submodules were requested for a simple module."""


class InsufficientBoundError(GRError):
    """A registry is not complete to a length that certifies the result."""

    def __init__(self, message: str, required: int | None = None):
        super().__init__(message)
        self.required = required


class ParseError(GRError, ValueError):
    """A representation document does not parse or does not validate."""
