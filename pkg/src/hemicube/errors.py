"""Exception types shared across the package."""


class HemicubeError(Exception):
    """Base class for all package-specific errors."""


class InvalidDimension(HemicubeError, ValueError):
    """A chain operation was asked to leave the valid dimension range."""


class NonCanonical(HemicubeError, ValueError):
    """A quotient operation received a face that is not a coset representative."""


class NotACycle(HemicubeError, ValueError):
    """Filling input has a nonzero boundary."""


class NotABoundary(HemicubeError, ValueError):
    """Filling input is a cycle but not in the image of the boundary map."""


class NotACocycle(HemicubeError, ValueError):
    """Cofilling input has a nonzero coboundary."""


class NotACoboundary(HemicubeError, ValueError):
    """Cofilling input is a cocycle but not in the image of the coboundary map."""


class NotSymmetric(HemicubeError, ValueError):
    """A lifted chain is not invariant under the quotienting code."""


class Unsupported(HemicubeError, ValueError):
    """The operation is not defined for this quotient (wrong code dimension)."""


class InvalidSyndrome(HemicubeError, ValueError):
    """The syndrome cannot be produced by any Pauli error (corrupted input)."""


class InternalInconsistency(HemicubeError, RuntimeError):
    """A structural guarantee failed; indicates a construction bug."""


class TooLarge(HemicubeError, ValueError):
    """An exhaustive scan would exceed its candidate budget."""
