"""Exception types raised across the package."""


class OrthoBallError(Exception):
    """Base class for all package errors."""


class ZeroVector(OrthoBallError):
    """All coordinates of a vector are numerically zero."""


class NotProper(OrthoBallError):
    """A point-distance argument is not a proper (interior) point."""


class DegeneratePlane(OrthoBallError):
    """A plane form has non-positive norm and spans no hyperbolic plane."""


class Singular(OrthoBallError):
    """A matrix inverse was requested for a numerically singular matrix."""


class NotHyperbolic(OrthoBallError):
    """Parameters (u, v, w) do not define a hyperbolic orthoscheme."""


class FactorizationFailed(OrthoBallError):
    """The vertex Gram matrix is not of Lorentz signature (1,3)."""


class NotTruncated(OrthoBallError):
    """Truncation points requested for a vertex that is not outer."""


class ThetaUndefined(OrthoBallError):
    """The volume angle theta has a negative radicand beyond tolerance."""


class NegativeRadius(OrthoBallError):
    """Ball volume requested for a negative radius."""


class CaseInapplicable(OrthoBallError):
    """The parameter triple is outside the case's configuration regime."""


class CoveringUndefined(OrthoBallError):
    """A covering radius would be infinite (boundary centre or vertex)."""


class NotSymmetric(OrthoBallError):
    """A symmetric (u = w) case was requested with u != w."""


class InfiniteStabilizer(OrthoBallError):
    """The centre's stabilizer subgroup is infinite."""


class EmptySweep(OrthoBallError):
    """A sweep specification produced no evaluable rows."""


class DatasetMissing(OrthoBallError):
    """The embedded reference dataset could not be loaded."""
