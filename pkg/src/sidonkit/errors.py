"""Exception types shared across the package."""


class SidonkitError(Exception):
    """Base class for package-specific errors."""


class FormatError(SidonkitError):
    """Malformed input file or config entry."""


class GuardRefusal(SidonkitError):
    """A search was refused because the instance exceeds the configured guard.

    Raised instead of silently truncating the search space; the message names
    the guard and the offending size.
    """


class StructuralViolation(SidonkitError):
    """An encoded instance violated a structural precondition.

    The coincidence analyzer raises this when the source graph fails the
    girth or unique-theta requirements it was assumed to satisfy, e.g. a sum
    coincidence whose edge graph closes a cycle shorter than 2k.
    """
