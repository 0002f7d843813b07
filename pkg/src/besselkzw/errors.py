"""Exception types shared by every numerical routine in the package."""


class BesselKzwError(Exception):
    """Base class for all package errors."""


class PoleError(BesselKzwError):
    """Argument coincides (within tolerance) with a pole of the function."""


class DomainError(BesselKzwError):
    """Argument lies outside the validity region of the requested formula."""


class NonConvergence(BesselKzwError):
    """An iterative scheme exhausted its budget before reaching tolerance."""
