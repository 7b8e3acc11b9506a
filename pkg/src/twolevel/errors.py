"""Exception types raised by the library."""


class TwoLevelError(ValueError):
    """Base class for domain errors."""


class RangeError(TwoLevelError):
    """An input or result lies outside the representable physical range."""


class InfeasibleError(TwoLevelError):
    """A process or cycle violates a feasibility condition (second law or
    a strict construction inequality)."""


class ConvergenceError(TwoLevelError):
    """A root bracket failed to converge."""
