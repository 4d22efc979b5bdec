"""Exception and warning types shared across the package."""


class ModhomError(Exception):
    """Base class for all library errors."""


class InvalidInputError(ModhomError):
    """Raised when an argument is non-finite or outside its documented domain."""


class ContractViolationError(ModhomError):
    """Raised when an operation is called outside its stated precondition
    (e.g. a CW-only formula applied to a pulsed source)."""


class ResolutionError(ModhomError):
    """Raised when a sampling grid is too coarse or too narrow to resolve
    the structure it is asked to integrate or analyze."""


class WindowError(ModhomError):
    """Raised when an integration window truncates a non-negligible part of
    the integrand (boundary mass above tolerance)."""


class TargetNotFoundError(ModhomError):
    """Raised when an inverse-design search exhausts its domain without
    reaching the requested target."""


class CoherenceTimeWarning(UserWarning):
    """Emitted when the interferometer imbalance tau0 does not exceed the
    biphoton coherence time; the formulas remain valid but the
    single-photon non-interference condition is not met."""
