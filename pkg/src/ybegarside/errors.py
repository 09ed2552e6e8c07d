"""Exception hierarchy.

Validation problems with an input solution derive from :class:`SolutionError`,
size guards from :class:`GuardExceeded`. The CLI maps these to exit codes.
"""


class YBEError(Exception):
    """Base class for every error raised by this package."""


class SolutionError(YBEError, ValueError):
    """The input does not describe a valid non-degenerate involutive solution."""


class ParseError(SolutionError):
    pass


class NotBijective(SolutionError):
    pass


class NotInvolutive(SolutionError):
    pass


class NotBraided(SolutionError):
    pass


class GammaInconsistent(SolutionError):
    pass


class IndexOutOfRange(YBEError, IndexError):
    pass


class GuardExceeded(YBEError):
    pass


class ClassSearchExceeded(GuardExceeded):
    pass


class GermGuardExceeded(GuardExceeded):
    pass


class BallGuardExceeded(GuardExceeded):
    pass


class PiCollision(YBEError):
    """One cocycle vector was reached with two different permutations."""


class NotPositive(YBEError, ValueError):
    pass


class ClassTooSmall(YBEError, ValueError):
    pass


class ShapeMismatch(YBEError, ValueError):
    pass


class InternalInconsistency(YBEError, AssertionError):
    """A structural identity that must hold for any valid input failed."""
