"""Exception types shared across the package."""


class LieDiagramError(Exception):
    """Base class for all domain errors raised by this package."""


class ParseError(LieDiagramError):
    """A name or spec string does not match the documented grammar."""


class InvalidType(LieDiagramError):
    """(family, rank) is not a valid finite Cartan type."""


class UnsupportedTwist(LieDiagramError):
    """Requested twist order has no diagram in the supported catalog."""


class NotAffine(LieDiagramError):
    """Matrix does not have corank 1 with a strictly positive null vector."""


class KacViolation(LieDiagramError):
    """A coloring fails the defining condition r * sum(black marks) = 2."""


class InvalidParameters(LieDiagramError):
    """Real-form parameters outside the documented legality table."""


class Unrecognized(LieDiagramError):
    """Painting does not match any catalog real form."""


class DiagramMismatch(LieDiagramError):
    """Operands are defined on different diagrams."""


class NotAdmissible(LieDiagramError):
    """Marking cannot represent an automorphism of the real form."""


class WrongCase(LieDiagramError):
    """Operation only defined in the equal-rank, trivial-symmetry case."""


class TooLarge(LieDiagramError):
    """Input exceeds the size bound of a brute-force routine."""
