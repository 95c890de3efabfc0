"""Exception hierarchy; the CLI maps each class to an exit code."""


class FactsumsError(Exception):
    """Base class for library errors."""


class InvalidArgument(FactsumsError, ValueError):
    """An input lies outside an operation's domain."""


class NoInverseError(InvalidArgument):
    """Modular inverse requested for a non-unit."""


class ResourceBoundError(FactsumsError):
    """An exhaustive enumeration was asked to exceed its size cap."""


class InternalInvariantError(FactsumsError, AssertionError):
    """A proven identity failed to hold, which means a bug."""
