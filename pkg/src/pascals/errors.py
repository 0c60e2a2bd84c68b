"""Exception hierarchy shared by every module of the package."""


class PascalError(Exception):
    """Base class for all library-specific errors."""


# scalars, polynomials, binary forms

class EmptyCoefficients(PascalError):
    """A binary form needs at least one Cayley coefficient."""


class OrderOutOfRange(PascalError):
    """Transvectant order r must satisfy 0 <= r <= min(deg G, deg H)."""


class NotDivisible(PascalError):
    """Exact division of a form by a linear form left a remainder."""


class BothZero(PascalError):
    """Proportionality of two forms is undefined when both are zero."""


class MissingAssignment(PascalError):
    """Polynomial evaluation did not cover every variable."""


# projective plane

class CoincidentPoints(PascalError):
    """Two points must be distinct to span a line."""


class CoincidentLines(PascalError):
    """Two lines must be distinct to meet in a single point."""


# hexagram / degenerate geometry

class InvalidLabels(PascalError):
    """A Pascal array must use each of the labels A..F exactly once."""


class DegenerateConfiguration(PascalError):
    """The six points are not in general enough position for the request."""


class ChartDegenerate(DegenerateConfiguration):
    """A line has no coordinates of the shape <1, s, t>."""


class DegeneratePencil(DegenerateConfiguration):
    """The three input lines are coincident or concurrent."""


class VanishingPhi(DegenerateConfiguration):
    """A chord-recovery output collapsed to the zero form."""


class ViewportExcludesAll(PascalError):
    """Nothing of the requested figure intersects the viewport."""


# reconstruction

class ReconstructionFailure(PascalError):
    """Base class for failures of the line-to-sextuple solve."""


class RankDeficient(ReconstructionFailure):
    """The 3x3 parameter system has rank < 2; inputs are not generic."""


class Inconsistent(ReconstructionFailure):
    """The parameter system has no common root; inputs are not realizable."""


class ZeroDenominator(ReconstructionFailure):
    """Every row pair of the parameter system had a vanishing denominator."""


class RoundTripFailed(ReconstructionFailure):
    """The recovered sextuple does not reproduce the input lines."""
