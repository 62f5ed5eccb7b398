"""Essential points of the truncated orthoscheme.

Each named point lives on an edge line of the orthoscheme: C, L, H are the
intersections of the polar plane of A0 with the edges A0A1, A0A2, A0A3;
J, E, Q mirror them on the polar plane of A3; F03 and F12 are the midpoints
of the principal edges; K is the midpoint of the truncated edge segment A2Q.
Every point is returned with the closed-form value of its self-form norm.
"""
from __future__ import annotations

import dataclasses
import functools
import math

import numpy as np

from .errors import DegeneratePlane, NotTruncated
from .lorentz import PointClass, bilinear
from .orthoscheme import GramPair, configure, sin2_pi_over, vertices

INF = math.inf


@dataclasses.dataclass(frozen=True)
class EssentialPoint:
    """A named point with its vector and closed-form norm <vec,vec>."""

    tag: str
    vec: np.ndarray
    norm: float


def _point(tag: str, vec: np.ndarray, norm: float) -> EssentialPoint:
    return EssentialPoint(tag=tag, vec=vec, norm=float(norm))


def truncation_points_a0(g: GramPair, verts: np.ndarray | None = None
                         ) -> dict[str, EssentialPoint]:
    """Points C, L, H where pol(A0) meets the edges from A0.

    Requires A0 outer (exact angle-sum test); the cut points are
    c = a1 - (a01/a00) a0 and its analogues on the other two edges.
    """
    if configure(g.params).a0_class is not PointClass.OUTER:
        raise NotTruncated("A0 is not an outer vertex")
    if verts is None:
        return _canonical_a0(g.params)
    return _build_a0(g, verts)


def _build_a0(g: GramPair, verts: np.ndarray) -> dict[str, EssentialPoint]:
    a = g.a
    a0, a1, a2, a3 = verts
    sv2 = sin2_pi_over(g.params.v)
    c = a1 - (a[0, 1] / a[0, 0]) * a0
    l = a2 - (a[0, 2] / a[0, 0]) * a0
    h = a3 - (a[0, 3] / a[0, 0]) * a0
    return {
        "C": _point("C", c, (a[1, 1] * a[0, 0] - a[0, 1] ** 2) / a[0, 0]),
        "L": _point("L", l, 1.0 / (g.B * a[0, 0])),
        "H": _point("H", h, sv2 / (g.B * a[0, 0])),
    }


def truncation_points_a3(g: GramPair, verts: np.ndarray | None = None
                         ) -> dict[str, EssentialPoint]:
    """Points J, E, Q where pol(A3) meets the edges from A3."""
    if configure(g.params).a3_class is not PointClass.OUTER:
        raise NotTruncated("A3 is not an outer vertex")
    if verts is None:
        return _canonical_a3(g.params)
    return _build_a3(g, verts)


def _build_a3(g: GramPair, verts: np.ndarray) -> dict[str, EssentialPoint]:
    a = g.a
    a0, a1, a2, a3 = verts
    sv2 = sin2_pi_over(g.params.v)
    j = a0 - (a[0, 3] / a[3, 3]) * a3
    e = a1 - (a[1, 3] / a[3, 3]) * a3
    q = a2 - (a[2, 3] / a[3, 3]) * a3
    return {
        "J": _point("J", j, sv2 / (g.B * a[3, 3])),
        "E": _point("E", e, 1.0 / (g.B * a[3, 3])),
        "Q": _point("Q", q, a[2, 2] / a[3, 3]),
    }


def midpoints(g: GramPair, verts: np.ndarray | None = None
              ) -> dict[str, EssentialPoint]:
    """Points F03 = a0 + a3 and F12 = a1 + a2 with their stated norms.

    Constructed for every configuration regardless of the endpoint classes.
    For u = w the endpoint norms agree in pairs and both points are the true
    hyperbolic midpoints of their edges, which is how the density cases use
    them.
    """
    if verts is None:
        return _canonical_mid(g.params)
    return _build_mid(g, verts)


def _build_mid(g: GramPair, verts: np.ndarray) -> dict[str, EssentialPoint]:
    a = g.a
    a0, a1, a2, a3 = verts
    return {
        "F03": _point("F03", a0 + a3, 2.0 * (a[0, 0] + a[0, 3])),
        "F12": _point("F12", a1 + a2, 2.0 * (a[1, 1] + a[1, 2])),
    }


def midpoint_K(g: GramPair, verts: np.ndarray, q: np.ndarray
               ) -> EssentialPoint:
    """Midpoint K of the truncated edge segment A2Q.

    k = a2/sqrt(-<a2,a2>) + q/sqrt(-<q,q>), with norm -2(1 + sqrt(1/a33)).
    Defined only when A3 is outer (so that Q exists) and A2 is proper.
    """
    if configure(g.params).a3_class is not PointClass.OUTER:
        raise NotTruncated("A3 is not an outer vertex")
    a = g.a
    if a[2, 2] >= 0:
        # u = inf puts A2 on the absolute; the unit normalization breaks down
        raise NotTruncated("A2 is not a proper point")
    a2 = verts[2]
    qq = bilinear(q, q)
    k = a2 / math.sqrt(-a[2, 2]) + q / math.sqrt(-qq)
    return _point("K", k, -2.0 * (1.0 + math.sqrt(1.0 / a[3, 3])))


def foot_point(x: np.ndarray, u_plane: np.ndarray) -> np.ndarray:
    """Orthogonal projection of x onto the plane with form vector u.

    y = x - (<x,u>/<u,u>) u; the result satisfies <y,u> = 0.
    """
    uu = bilinear(u_plane, u_plane)
    scale = float(np.dot(u_plane, u_plane))
    if scale == 0.0 or abs(uu) / scale <= 1e-10:
        raise DegeneratePlane("plane form norm is numerically zero")
    return np.asarray(x, dtype=float) - (bilinear(x, u_plane) / uu) * u_plane


# canonical-path memoization: keyed on the parameter triple, valid only for
# vectors produced by the package's own factorization


@functools.lru_cache(maxsize=None)
def _canonical_a0(params) -> dict[str, EssentialPoint]:
    from .orthoscheme import gram
    g = gram(params)
    return _build_a0(g, vertices(g))


@functools.lru_cache(maxsize=None)
def _canonical_a3(params) -> dict[str, EssentialPoint]:
    from .orthoscheme import gram
    g = gram(params)
    return _build_a3(g, vertices(g))


@functools.lru_cache(maxsize=None)
def _canonical_mid(params) -> dict[str, EssentialPoint]:
    from .orthoscheme import gram
    g = gram(params)
    return _build_mid(g, vertices(g))
