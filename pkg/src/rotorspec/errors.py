"""Exception types shared across the package."""


class RotorSpecError(Exception):
    """Base class for all package-specific errors."""


class NonPositiveMassError(RotorSpecError):
    """A particle mass is zero or negative."""


class AllCoincidentError(RotorSpecError):
    """Every particle sits at the center of mass; no rotational degrees of freedom."""


class NotRigidVelocityError(RotorSpecError):
    """A velocity list is not compatible with any rigid rotation of the body."""


class RepresentationClosureError(RotorSpecError):
    """An operator image left the space it must preserve (indicates a bug)."""


class SchemaError(RotorSpecError):
    """A job configuration document violates the input schema."""
