"""Signature-(1,3) linear algebra on the projective model of hyperbolic 3-space.

Vectors are numpy arrays of shape (4,) holding coordinates (x0, x1, x2, x3)
with the bilinear form <x,y> = -x0*y0 + x1*y1 + x2*y2 + x3*y3.  Points and
plane forms are projective: every exported predicate and distance is invariant
under nonzero rescaling of its arguments.
"""
from __future__ import annotations

import enum
import math

import numpy as np

from .errors import DegeneratePlane, NotProper, Singular, ZeroVector

# classification tolerance on the normalized form value
EPS_CLASS = 1e-10

# metric signs of the four coordinates
_SIGNS = np.array([-1.0, 1.0, 1.0, 1.0])


class PointClass(enum.Enum):
    PROPER = "proper"
    BOUNDARY = "boundary"
    OUTER = "outer"


def bilinear(x: np.ndarray, y: np.ndarray) -> float:
    """Form value <x,y> = -x0*y0 + x1*y1 + x2*y2 + x3*y3."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    return float(np.dot(_SIGNS * x, y))


def classify(x: np.ndarray) -> PointClass:
    """Class of a projective point by the sign of <x,x>.

    The form value is normalized by the squared Euclidean norm of the
    coordinates so scaling cannot move a point across the tolerance band.
    """
    x = np.asarray(x, dtype=float)
    if bool(np.all(np.abs(x) < EPS_CLASS)):
        raise ZeroVector("cannot classify the zero vector")
    q = bilinear(x, x) / float(np.dot(x, x))
    if q < -EPS_CLASS:
        return PointClass.PROPER
    if q > EPS_CLASS:
        return PointClass.OUTER
    return PointClass.BOUNDARY


def dist_pp(x: np.ndarray, y: np.ndarray) -> float:
    """Hyperbolic distance between two proper points.

    cosh d = |<x,y>| / sqrt(<x,x><y,y>).  The absolute value makes the
    result independent of the representative signs.
    """
    if classify(x) is not PointClass.PROPER:
        raise NotProper("first point is not proper")
    if classify(y) is not PointClass.PROPER:
        raise NotProper("second point is not proper")
    xx, yy, xy = bilinear(x, x), bilinear(y, y), bilinear(x, y)
    c = abs(xy) / math.sqrt(xx * yy)
    # rounding can push coincident points a hair below 1
    return math.acosh(max(1.0, c))


def dist_pplane(x: np.ndarray, u: np.ndarray) -> float:
    """Distance from a proper point to the plane with form vector u.

    sinh d = |<x,u>| / sqrt(-<x,x><u,u>), requiring <u,u> > 0.
    """
    if classify(x) is not PointClass.PROPER:
        raise NotProper("point is not proper")
    uu = bilinear(u, u)
    if uu <= 0:
        raise DegeneratePlane("plane form must have positive norm")
    xx = bilinear(x, x)
    return math.asinh(abs(bilinear(x, u)) / math.sqrt(-xx * uu))


def invert4(b: np.ndarray) -> np.ndarray:
    """Inverse of a 4x4 symmetric matrix with a scale-aware guard.

    Declares the matrix singular when |det| <= 1e-14 * (max row norm)^4.
    """
    b = np.asarray(b, dtype=float)
    if b.shape != (4, 4):
        raise ValueError("expected a 4x4 matrix")
    det = float(np.linalg.det(b))
    scale = float(np.max(np.linalg.norm(b, axis=1)))
    if abs(det) <= 1e-14 * scale**4:
        raise Singular(f"matrix is numerically singular (det={det:.3e})")
    return np.linalg.inv(b)
