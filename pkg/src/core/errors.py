"""Exception hierarchy shared by every Moulton module."""

from typing import Any, List, Optional, Sequence


class MoultonError(Exception):
    """Base exception for Moulton errors."""

    pass


class InvalidInputError(MoultonError):
    """Base exception for inputs that violate an operation's preconditions."""

    pass


class NumericalError(MoultonError):
    """Base exception for numerical procedures that did not deliver a result."""

    pass


class InvalidMass(InvalidInputError):
    """Exception raised when a mass is not strictly positive or too few masses are given."""

    pass


class DimensionMismatch(InvalidInputError):
    """Exception raised when a configuration and a mass vector have different lengths."""

    pass


class CollisionError(InvalidInputError):
    """Exception raised when two bodies occupy the same position."""

    pass


class ZeroConfiguration(InvalidInputError):
    """Exception raised when a configuration has zero moment of inertia."""

    pass


class NotNormalized(InvalidInputError):
    """Exception raised when a unit-inertia configuration is required but not given."""

    pass


class InvalidOrdering(InvalidInputError):
    """Exception raised when a sequence of body indices is not a permutation."""

    pass


class SizeLimit(InvalidInputError):
    """Exception raised when a number of bodies exceeds what enumeration supports."""

    pass


class SizeMismatch(InvalidInputError):
    """Exception raised when orderings of incompatible sizes are combined."""

    pass


class IncompatibleOrderings(InvalidInputError):
    """Exception raised when an extended ordering does not restrict to the base ordering."""

    pass


class InvalidEpsilon(InvalidInputError):
    """Exception raised when perturbation parameters are not positive and strictly decreasing."""

    pass


class SymmetricPair(InvalidInputError):
    """Exception raised when two orderings are equal or mirror images of each other."""

    pass


class EmptyInput(InvalidInputError):
    """Exception raised when a nonempty sequence is required."""

    pass


class NoConvergence(NumericalError):
    """Exception raised when the Newton iteration stops before reaching its tolerance.

    Attributes:
        configuration: Last iterate.
        gradient_norm: Max-norm of the gradient at the last iterate.
        iterations: Number of Newton steps taken.
    """

    def __init__(
        self,
        message: str,
        configuration: Optional[Sequence[float]] = None,
        gradient_norm: float = float("nan"),
        iterations: int = 0,
    ):
        super().__init__(message)
        self.configuration = list(configuration) if configuration is not None else None
        self.gradient_norm = gradient_norm
        self.iterations = iterations


class RootBracketFailure(NumericalError):
    """Exception raised when the quintic does not change sign on its root bracket."""

    pass


class SpectrumIncomplete(NumericalError):
    """Exception raised when some ordering classes of a spectrum failed to converge.

    Attributes:
        failed: Canonical class labels (as "2,1,3" strings) whose solve failed.
        entries: Entries that did converge, for inspection.
    """

    def __init__(self, message: str, failed: List[str], entries: Optional[List[Any]] = None):
        super().__init__(message)
        self.failed = failed
        self.entries = entries or []


class CheckFailure(NumericalError):
    """Exception raised by the self-check suite; carries the failing check name."""

    def __init__(self, check: str, detail: str):
        super().__init__(f"check '{check}' failed: {detail}")
        self.check = check
        self.detail = detail
